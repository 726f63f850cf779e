#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace realdiv {

class FactorizationError : public std::runtime_error {
  public:
    FactorizationError(const std::string& what, int minor_order)
        : std::runtime_error(what), failing_minor(minor_order) {}
    /// Order of the leading principal minor that failed positivity.
    int failing_minor;
};

/// Upper-triangular B with B^T B = T and det B > 0 (Cholesky, row variant).
/// T must be symmetric to 1e-12 relative and positive definite.
Eigen::MatrixXd spd_sqrt_factor(const Eigen::MatrixXd& T);

/// Rank of an integer matrix over GF(2), by exact elimination on bit rows.
int rank_mod2(const Eigen::MatrixXi& M);

}  // namespace realdiv
