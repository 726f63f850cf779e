#include "realdiv/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "realdiv/quadrature.hpp"

namespace realdiv {

double complete_elliptic_K(double m) {
    if (!(m >= 0.0)) throw DomainError("complete_elliptic_K: requires m >= 0");
    if (m >= 1.0) throw DomainError("complete_elliptic_K: diverges as m -> 1");
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    // AGM converges quadratically; 40 iterations is far beyond what double
    // precision ever needs but bounds the loop.
    for (int i = 0; i < 40; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::fabs(a - b) <= 1e-17 * a) break;
    }
    return 1.5707963267948966 / a;
}

double carlson_RF(double x, double y, double z) {
    // Carlson, Numerical Algorithms 10 (1995), eqs 2.2-2.7.
    const double tol = std::pow(3.0 * 2.2e-18, 1.0 / 8.0);
    double A0 = (x + y + z) / 3.0;
    double An = A0;
    double Q = std::max({std::fabs(A0 - x), std::fabs(A0 - y), std::fabs(A0 - z)}) / tol;
    double x0 = x, y0 = y, z0 = z;
    double mul = 1.0;
    while (Q >= mul * std::fabs(An)) {
        const double lam = std::sqrt(x0) * std::sqrt(y0) + std::sqrt(y0) * std::sqrt(z0) +
                           std::sqrt(z0) * std::sqrt(x0);
        An = 0.25 * (An + lam);
        x0 = 0.25 * (x0 + lam);
        y0 = 0.25 * (y0 + lam);
        z0 = 0.25 * (z0 + lam);
        mul *= 4.0;
    }
    const double X = (A0 - x) / (mul * An);
    const double Y = (A0 - y) / (mul * An);
    const double Z = -(X + Y);
    const double E2 = X * Y - Z * Z;
    const double E3 = X * Y * Z;
    return (E3 * (6930.0 * E3 + E2 * (15015.0 * E2 - 16380.0) + 17160.0) +
            E2 * ((10010.0 - 5775.0 * E2) * E2 - 24024.0) + 240240.0) /
           (240240.0 * std::sqrt(An));
}

double incomplete_elliptic_F(double a, double k) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("incomplete_elliptic_F: requires 0 <= a <= 1");
    const double ka = k * a;
    if (ka * ka >= 1.0 && a < 1.0)
        throw DomainError("incomplete_elliptic_F: integrand not real, k^2 a^2 >= 1");
    if (a == 0.0) return 0.0;
    // F(a, k) = a R_F(1 - a^2, 1 - k^2 a^2, 1); fine at a = 1 for |k| < 1.
    const double x = (1.0 - a) * (1.0 + a);
    const double y = 1.0 - ka * ka;
    if (y <= 0.0) throw DomainError("incomplete_elliptic_F: diverges, k^2 a^2 = 1");
    return a * carlson_RF(x, y, 1.0);
}

}  // namespace realdiv
