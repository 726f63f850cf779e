#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "realdiv/bergman.hpp"
#include "realdiv/torus_sim.hpp"

namespace realdiv {

/// CSV rows: oval_id, s, x_1, ..., x_g (s = normalized arc parameter).
void write_polyline_csv(std::ostream& os, const std::vector<TorusPolyline>& polylines);

/// SVG plot for g = 2: the fundamental domain of the real Jacobian (blue)
/// with the Abel-Jacobi image of the real locus on top (red), both drawn in
/// the orthonormal frame coordinates.
void write_polyline_svg(std::ostream& os, const std::vector<TorusPolyline>& polylines,
                        const Eigen::MatrixXd& T);

/// Binary PGM (P5), 255 = occupied; one image per component label.
void write_pgm(std::ostream& os, const TorusBitmap& bitmap);

}  // namespace realdiv
