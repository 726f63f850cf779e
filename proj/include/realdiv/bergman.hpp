#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "realdiv/curves.hpp"
#include "realdiv/periods.hpp"

namespace realdiv {

/// Sampled Abel-Jacobi image of one real oval, in a-cycle coordinates on the
/// torus (R/Z)^g.  Rows of `points` are samples in [0, 1)^g; `lift` holds the
/// same samples unwrapped in R^g (useful for convexity checks and plotting).
struct TorusPolyline {
    int g = 0;
    Eigen::MatrixXd points;        // n x g, reduced mod Z^g
    Eigen::MatrixXd lift;          // n x g, continuous lift
    std::uint32_t component_label = 0;  // bits in (Z/2)^{r-1}
    bool closed = true;
    double closure_defect = 0.0;   // distance of the loop increment to Z^g
};

/// Coefficient matrix C = B^{-1} with B^T B = T: the rows of C turn the
/// a-normalized differentials into an orthonormal frame for the Hodge product.
Eigen::MatrixXd orthonormal_frame(const Eigen::MatrixXd& T);

/// Length of the real locus in the Bergman metric.
double real_locus_length(const RealHyperellipticCurve& curve, const ComessattiPeriods& periods,
                         const QuadratureSpec& spec);

/// Abel-Jacobi image of every real oval, n_samples points per oval.
std::vector<TorusPolyline> abel_jacobi_real_polyline(const RealHyperellipticCurve& curve,
                                                     const ComessattiPeriods& periods,
                                                     int n_samples, const QuadratureSpec& spec);

/// Total length of a polyline measured with the constant metric whose Gram
/// matrix on lattice coordinates is T^{-1} (segment sums of the lift).
double polyline_bergman_length(const TorusPolyline& line, const Eigen::MatrixXd& T);

class AbelJacobiError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace realdiv
