#include "realdiv/jacobian.hpp"

#include <cmath>

#include "realdiv/linalg.hpp"

namespace realdiv {

double vol_identity_component(const Eigen::MatrixXd& T) {
    // Factor through the Cholesky check so non-SPD input fails loudly, and
    // det(T)^{-1/2} = 1 / prod(diag B) comes out without cancellation.
    const Eigen::MatrixXd B = spd_sqrt_factor(T);
    double det_b = 1.0;
    for (Eigen::Index i = 0; i < B.rows(); ++i) det_b *= B(i, i);
    return 1.0 / det_b;
}

long real_component_count(const Eigen::MatrixXi& M) {
    const int g = static_cast<int>(M.rows());
    const int gamma = rank_mod2(M);
    return 1L << (g - gamma);
}

RealJacobianReport vol_real(const ComessattiPeriods& periods) {
    RealJacobianReport rep;
    rep.g = periods.g;
    rep.gamma = rank_mod2(periods.M);
    rep.component_count = 1L << (periods.g - rep.gamma);
    rep.vol_identity = vol_identity_component(periods.T);
    rep.vol_total = static_cast<double>(rep.component_count) * rep.vol_identity;
    const Eigen::MatrixXd Tinv = periods.T.inverse();
    rep.lattice_side_lengths.resize(static_cast<size_t>(periods.g));
    for (int i = 0; i < periods.g; ++i)
        rep.lattice_side_lengths[static_cast<size_t>(i)] = std::sqrt(Tinv(i, i));
    return rep;
}

}  // namespace realdiv
