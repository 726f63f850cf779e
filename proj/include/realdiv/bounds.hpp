#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realdiv/quadrature.hpp"

namespace realdiv {

enum class BoundKind { lower, upper };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    double value = 0.0;
    std::string validity;    // human-readable range of applicability
    std::string provenance;  // which estimate produced it
};

struct BoundReport {
    std::string curve_id;
    std::vector<BoundEntry> entries;
};

/// Every valid lower bound must sit below every valid upper bound.
bool sandwich_consistent(const BoundReport& report);

/// General metric lower bound on the totally real divisor threshold:
///   2 (1 - r + ((r/2)^g ((r-1)/e)^{g(r-1)} vol0 / len^g)^{1/(g r)}) - 1,
/// with the k = 0 convention ((r-1)/e)^{g(r-1)} = 1 when r = 1.
double metric_lower_bound(int g, int r, double vol0, double len);

/// Connected real locus case: vol^{1/g} / len.
double metric_lower_bound_r1(int g, double vol, double len);

/// 2g - 1 when the curve has r = g or r = g + 1 ovals; absent otherwise.
std::optional<double> upper_bound_many_ovals(int g, int r);

/// Everything the one-parameter genus-2 family yields for a given eps:
/// the report entries plus the quarter point and lattice side lengths that
/// feed the rectangle and rhombus estimates.
struct XepsBounds {
    BoundReport report;
    double u = 0.0;   // quarter point, first coordinate (orthonormal frame)
    double v = 0.0;   // quarter point, second coordinate
    double ell1 = 0.0, ell2 = 0.0;  // fundamental domain side lengths
};

XepsBounds xeps_bounds(double eps, const QuadratureSpec& spec);

}  // namespace realdiv
