#pragma once

#include <Eigen/Dense>
#include <vector>

#include "realdiv/periods.hpp"

namespace realdiv {

struct RealJacobianReport {
    int g = 0;
    int gamma = 0;            // rank of M over GF(2)
    long component_count = 0; // 2^{g - gamma}
    double vol_identity = 0;  // det(T)^{-1/2}, canonical metric
    double vol_total = 0;     // component_count * vol_identity
    std::vector<double> lattice_side_lengths;  // sqrt((T^{-1})_{ii})
};

/// Volume of the identity component in the canonical metric, det(T)^{-1/2}.
double vol_identity_component(const Eigen::MatrixXd& T);

/// Number of connected components of the real points, 2^{g - rank_2(M)}.
long real_component_count(const Eigen::MatrixXi& M);

RealJacobianReport vol_real(const ComessattiPeriods& periods);

}  // namespace realdiv
