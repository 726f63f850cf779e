#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace realdiv {

class CurveError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class CurveFamily {
    family_a,  // w^2 = (c1 + z^2)(c2 + z^2)(c3 + z^2), 0 < c1 < c2 < c3; genus 2, one oval
    m_curve,   // y^2 = prod (x - a_i) over 2g+2 distinct real roots; g+1 ovals
};

struct TopologicalType {
    int g = 0;  // genus
    int r = 0;  // number of real ovals
    int a = 0;  // 0 = dividing, 1 = non-dividing
};

/// Immutable curve model restricted to the two supported families.
class RealHyperellipticCurve {
  public:
    CurveFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    int genus() const { return genus_; }
    TopologicalType topo_type() const;

    /// Sextic in t such that family A curves are w^2 = f(z^2) with t = z^2.
    double family_a_f(double t) const;
    /// prod (x - a_i) for M-curves.
    double m_curve_p(double x) const;

    std::string id() const;

    friend RealHyperellipticCurve make_family_a(double c1, double c2, double c3);
    friend RealHyperellipticCurve make_m_curve(const std::vector<double>& roots);

  private:
    RealHyperellipticCurve(CurveFamily fam, std::vector<double> params, int genus)
        : family_(fam), params_(std::move(params)), genus_(genus) {}
    CurveFamily family_;
    std::vector<double> params_;
    int genus_;
};

RealHyperellipticCurve make_family_a(double c1, double c2, double c3);

/// The one-parameter genus-2 specialization c = ((1-eps)^2, 1, (1+eps)^2).
RealHyperellipticCurve make_family_a_eps(double eps);

RealHyperellipticCurve make_m_curve(const std::vector<double>& roots);

TopologicalType topological_type(const RealHyperellipticCurve& curve);

/// Validity of (g, r, a) as the type of a smooth real curve:
/// 0 <= r <= g+1; r = 0 forces a = 1; r = g+1 forces a = 0;
/// a = 0 forces r == g+1 (mod 2).
bool admissible_topological_type(const TopologicalType& t);

}  // namespace realdiv
