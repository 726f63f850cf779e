#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace realdiv {

/// Tolerances and refinement budget for the singular quadrature routines.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_levels = 12;
};

/// Endpoint behaviour of an integrand on (a, b).  The smooth factor is
/// multiplied by the corresponding singular weight:
///   none            : f(t) = smooth(t)
///   inv_sqrt_left   : f(t) = smooth(t) / sqrt(t - a)
///   inv_sqrt_right  : f(t) = smooth(t) / sqrt(b - t)
///   inv_sqrt_both   : f(t) = smooth(t) / sqrt((t - a)(b - t))
///   decay_at_infinity : b = +inf, f(t) = smooth(t) with f = O(t^{-3/2}) or faster
enum class SingularityPattern {
    none,
    inv_sqrt_left,
    inv_sqrt_right,
    inv_sqrt_both,
    decay_at_infinity,
};

struct SingularIntegrand {
    std::function<double(double)> smooth_part;
    SingularityPattern pattern = SingularityPattern::none;
    double a = 0.0;
    double b = 1.0;  // may be +infinity
};

struct QuadratureResult {
    double value = 0.0;
    double err_est = 0.0;
};

/// Thrown when the level-doubling refinement runs out of budget.  Carries the
/// best estimate so callers can decide whether to keep going.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double best, double err)
        : std::runtime_error(what), best_value(best), err_est(err) {}
    double best_value;
    double err_est;
};

class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Tanh-sinh quadrature of an integrand with inverse-square-root endpoint
/// singularities; infinite upper limits are folded to (0, 1] by t = 1/s.
QuadratureResult integrate_singular(const SingularIntegrand& f, const QuadratureSpec& spec);

/// Convenience wrapper returning just the value.
double integrate(const SingularIntegrand& f, const QuadratureSpec& spec);

}  // namespace realdiv
