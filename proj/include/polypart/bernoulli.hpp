// bernoulli.hpp
//
// Exact rational Bernoulli numbers (convention B_1 = -1/2) via the defining
// recurrence sum_{j=0}^{m} binom(m+1,j) B_j = 0.  Exact arithmetic sidesteps
// the catastrophic cancellation the recurrence has in floating point, and
// the values are precision-independent so one cache serves every Real
// instantiation.  Used by the Euler-Maclaurin zeta and the Stirling gamma.

#pragma once

#include <mutex>
#include <vector>

#include "precision.hpp"

namespace polypart {

inline bigint binom_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

namespace detail {
inline const bigrat& bernoulli_rat_impl(unsigned m) {
    static std::vector<bigrat> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        unsigned k = static_cast<unsigned>(cache.size());
        if (k == 0) {
            cache.emplace_back(1);
            continue;
        }
        // B_k = -1/(k+1) * sum_{j<k} binom(k+1, j) B_j
        bigrat s = 0;
        for (unsigned j = 0; j < k; ++j) s += bigrat(binom_exact(k + 1, j)) * cache[j];
        cache.push_back(-s / bigrat(k + 1));
    }
    return cache[m];
}
} // namespace detail

inline bigrat bernoulli_rat(unsigned m) { return detail::bernoulli_rat_impl(m); }

template <class Real>
Real bernoulli(unsigned m) {
    return from_bigrat<Real>(bernoulli_rat(m));
}

} // namespace polypart
