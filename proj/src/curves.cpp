#include "realdiv/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace realdiv {

TopologicalType RealHyperellipticCurve::topo_type() const {
    if (family_ == CurveFamily::family_a) return {2, 1, 0};
    return {genus_, genus_ + 1, 0};
}

double RealHyperellipticCurve::family_a_f(double t) const {
    return (params_[0] + t) * (params_[1] + t) * (params_[2] + t);
}

double RealHyperellipticCurve::m_curve_p(double x) const {
    double v = 1.0;
    for (double r : params_) v *= (x - r);
    return v;
}

std::string RealHyperellipticCurve::id() const {
    std::ostringstream os;
    os.precision(17);
    if (family_ == CurveFamily::family_a) {
        os << "family_a(" << params_[0] << "," << params_[1] << "," << params_[2] << ")";
    } else {
        os << "m_curve(";
        for (size_t i = 0; i < params_.size(); ++i) os << (i ? "," : "") << params_[i];
        os << ")";
    }
    return os.str();
}

RealHyperellipticCurve make_family_a(double c1, double c2, double c3) {
    if (!(0.0 < c1 && c1 < c2 && c2 < c3))
        throw CurveError("make_family_a: requires 0 < c1 < c2 < c3 (distinct, positive)");
    return RealHyperellipticCurve(CurveFamily::family_a, {c1, c2, c3}, 2);
}

RealHyperellipticCurve make_family_a_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw CurveError("make_family_a_eps: requires 0 < eps < 1");
    const double om = (1.0 - eps) * (1.0 - eps);
    const double op = (1.0 + eps) * (1.0 + eps);
    return make_family_a(om, 1.0, op);
}

RealHyperellipticCurve make_m_curve(const std::vector<double>& roots) {
    const size_t n = roots.size();
    if (n < 4 || n % 2 != 0)
        throw CurveError("make_m_curve: needs an even number 2g+2 >= 4 of roots");
    std::vector<double> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < n; ++i)
        if (!(sorted[i - 1] < sorted[i])) throw CurveError("make_m_curve: roots must be distinct");
    const int genus = static_cast<int>(n) / 2 - 1;
    return RealHyperellipticCurve(CurveFamily::m_curve, std::move(sorted), genus);
}

TopologicalType topological_type(const RealHyperellipticCurve& curve) { return curve.topo_type(); }

bool admissible_topological_type(const TopologicalType& t) {
    if (t.g < 0 || t.r < 0 || t.r > t.g + 1) return false;
    if (t.a != 0 && t.a != 1) return false;
    if (t.r == 0 && t.a != 1) return false;
    if (t.r == t.g + 1 && t.a != 0) return false;
    if (t.a == 0 && ((t.r - t.g - 1) % 2 + 2) % 2 != 0) return false;
    return true;
}

}  // namespace realdiv
