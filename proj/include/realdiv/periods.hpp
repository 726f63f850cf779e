#pragma once

#include <Eigen/Dense>

#include "realdiv/curves.hpp"
#include "realdiv/quadrature.hpp"

namespace realdiv {

class PeriodError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PeriodResiduals {
    double symmetry_defect = 0.0;     // max |T - T^t|
    double integrality_defect = 0.0;  // max |2 Re(tau) - round(2 Re(tau))|
    double min_eigenvalue_T = 0.0;
};

/// Period matrix in Comessatti form Pi = [ I | (1/2) M + i T ] with M integer
/// symmetric and T real symmetric positive definite.
struct ComessattiPeriods {
    int g = 0;
    Eigen::MatrixXi M;
    Eigen::MatrixXd T;
    PeriodResiduals residuals;

    Eigen::MatrixXcd riemann_matrix() const {
        return 0.5 * M.cast<double>().cast<std::complex<double>>() +
               std::complex<double>(0, 1) * T.cast<std::complex<double>>();
    }
};

/// Data the Abel-Jacobi and length computations need beyond (M, T): the
/// a-period normalizations of the raw differentials.
struct FamilyAPeriodData {
    // Base integrals over the two t-intervals (c1, c2) and (c2, c3):
    //   A1 = int_{c1}^{c2} dt / sqrt(t |f(-t)|),  B1 = same over (c2, c3),
    //   A2 = int_{c1}^{c2} dt / sqrt(|f(-t)|),    B2 = same over (c2, c3).
    double A1 = 0, B1 = 0, A2 = 0, B2 = 0;
    // a-periods of dz/w and z dz/w used to normalize the differentials.
    double a_period_1 = 0, a_period_2 = 0;
};

struct MCurvePeriodData {
    Eigen::MatrixXd A;      // a-periods of x^{j-1} dx / y over the bounded ovals
    Eigen::MatrixXd B_im;   // imaginary parts of the b-periods (alternating sums folded in)
    double sign = 1.0;      // orientation sign applied to the imaginary ovals
};

ComessattiPeriods periods_family_a(const RealHyperellipticCurve& curve, const QuadratureSpec& spec,
                                   FamilyAPeriodData* data = nullptr);

ComessattiPeriods periods_m_curve(const RealHyperellipticCurve& curve, const QuadratureSpec& spec,
                                  MCurvePeriodData* data = nullptr);

ComessattiPeriods compute_periods(const RealHyperellipticCurve& curve, const QuadratureSpec& spec);

enum class BaseLoop { S_r, R_m };

/// Reflection matrix of the Comessatti basis attached to a topological
/// surface model of signature (g_tilde, r, m): block diagonal
/// (J_{2 g_tilde}, I_m, 0_{r-1}) for base loop S_r, and the all-ones variant
/// for base loop R_m.  g = 2 g_tilde + m + r - 1.
Eigen::MatrixXi reflection_normal_form(int g_tilde, int r, int m, BaseLoop base);

}  // namespace realdiv
