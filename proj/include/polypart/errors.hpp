// errors.hpp
//
// One exception type for the whole library.  Every failure mode carries a
// stable code so callers (and the CLI) can react without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace polypart {

enum class errc {
    // polynomial validation / roots
    degree_too_small,
    non_positive_leading,
    gcd_violation,
    root_finding_failed,
    complex_root,
    negative_root_below_minus_one,
    out_of_range,
    // exact counting
    guard_exceeded,
    memory_cap_exceeded,
    // special functions
    pole_at_one,
    pole_at_nonpositive_integer,
    domain_error,
    non_convergence,
    branch_error,
    integer_s,
    order_mismatch,
    nonzero_constant_term,
    quadrature_failure,
    // MW zeta
    negative_alpha,
    near_pole,
    insufficient_depth,
    closed_form_mismatch,
    derivative_mismatch,
    // phi / saddle
    tail_too_large,
    ratio_not_less_than_one,
    non_convergent_series,
    no_bracket,
    // arcs
    overlap_detected,
    quadrature_budget_exceeded,
    // config / CLI
    config_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degree_too_small: return "DegreeTooSmall";
        case errc::non_positive_leading: return "NonPositiveLeading";
        case errc::gcd_violation: return "GcdViolation";
        case errc::root_finding_failed: return "RootFindingFailed";
        case errc::complex_root: return "ComplexRoot";
        case errc::negative_root_below_minus_one: return "NegativeRootBelowMinusOne";
        case errc::out_of_range: return "OutOfRange";
        case errc::guard_exceeded: return "GuardExceeded";
        case errc::memory_cap_exceeded: return "MemoryCapExceeded";
        case errc::pole_at_one: return "PoleAtOne";
        case errc::pole_at_nonpositive_integer: return "PoleAtNonpositiveInteger";
        case errc::domain_error: return "DomainError";
        case errc::non_convergence: return "NonConvergence";
        case errc::branch_error: return "BranchError";
        case errc::integer_s: return "IntegerS";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::nonzero_constant_term: return "NonzeroConstantTerm";
        case errc::quadrature_failure: return "QuadratureFailure";
        case errc::negative_alpha: return "NegativeAlpha";
        case errc::near_pole: return "NearPole";
        case errc::insufficient_depth: return "InsufficientDepth";
        case errc::closed_form_mismatch: return "ClosedFormMismatch";
        case errc::derivative_mismatch: return "DerivativeMismatch";
        case errc::tail_too_large: return "TailTooLarge";
        case errc::ratio_not_less_than_one: return "RatioNotLessThanOne";
        case errc::non_convergent_series: return "NonConvergentSeries";
        case errc::no_bracket: return "NoBracket";
        case errc::overlap_detected: return "OverlapDetected";
        case errc::quadrature_budget_exceeded: return "QuadratureBudgetExceeded";
        case errc::config_error: return "ConfigError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace polypart
