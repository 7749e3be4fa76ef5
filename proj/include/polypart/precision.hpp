// precision.hpp
//
// Working-precision plumbing.  The whole library is templated on the real
// type; the intended instantiations are the MPFR-backed aliases below.
// PrecisionConfig is threaded explicitly through every module -- there is no
// hidden global precision state.  cfg.digits must match (or understate) the
// precision actually carried by the Real type in use; all tolerances are
// derived from it.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cstddef>
#include <cstdint>

#include "errors.hpp"

namespace polypart {

namespace mp = boost::multiprecision;

template <unsigned Digits10>
using static_real = mp::number<mp::mpfr_float_backend<Digits10>, mp::et_off>;

using real32  = static_real<32>;
using real64  = static_real<64>;
using real96  = static_real<96>;
using real128 = static_real<128>;

// Runtime-precision real for the CLI (precision fixed once at startup via
// dyn_real::default_precision before any value is created).
using dyn_real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

using bigint = mp::cpp_int;
using bigrat = mp::cpp_rational;

struct PrecisionConfig {
    unsigned digits = 64;              // working decimal digits
    std::size_t series_cap = 1000000;  // max terms per series

    PrecisionConfig() = default;
    explicit PrecisionConfig(unsigned d, std::size_t cap = 1000000) : digits(d), series_cap(cap) {
        if (digits < 16) raise(errc::config_error, "digits must be >= 16");
        if (series_cap < 1000) raise(errc::config_error, "series_cap must be >= 10^3");
    }
};

// 10^-k at the precision of Real.
template <class Real>
Real pow10(long k) {
    return pow(Real(10), static_cast<long long>(k));
}

// Derived tolerances.  tol_root = 10^(-digits/2): root-refinement noise must
// not trip validation.
template <class Real>
Real tol_root(const PrecisionConfig& cfg) {
    return pow10<Real>(-static_cast<long>(cfg.digits / 2));
}
template <class Real>
Real tol_half(const PrecisionConfig& cfg) {
    return pow10<Real>(-static_cast<long>(cfg.digits / 2));
}
template <class Real>
Real tol_quarter(const PrecisionConfig& cfg) {
    return pow10<Real>(-static_cast<long>(cfg.digits / 4));
}
template <class Real>
Real tol_full(const PrecisionConfig& cfg) {
    return pow10<Real>(-static_cast<long>(cfg.digits));
}
// Series terms are driven below this before truncation fires.
template <class Real>
Real tol_series(const PrecisionConfig& cfg) {
    return pow10<Real>(-static_cast<long>(cfg.digits) - 4);
}

// Cached fundamental constants, one set per Real instantiation.
template <class Real>
const Real& const_pi() {
    static const Real v = [] {
        Real r;
        mpfr_const_pi(r.backend().data(), MPFR_RNDN);
        return r;
    }();
    return v;
}

template <class Real>
const Real& const_euler() {  // Euler-Mascheroni gamma
    static const Real v = [] {
        Real r;
        mpfr_const_euler(r.backend().data(), MPFR_RNDN);
        return r;
    }();
    return v;
}

template <class Real>
const Real& const_ln2pi() {
    static const Real v = log(2 * const_pi<Real>());
    return v;
}

template <class Real>
Real from_bigint(const bigint& n) {
    return Real(n.str());
}

template <class Real>
Real from_bigrat(const bigrat& q) {
    return from_bigint<Real>(numerator(q)) / from_bigint<Real>(denominator(q));
}

} // namespace polypart
