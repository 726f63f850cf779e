#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "realdiv/bergman.hpp"

namespace realdiv {

class SimError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class SimBudgetExceeded : public std::runtime_error {
  public:
    SimBudgetExceeded(const std::string& what, int budget, double coverage)
        : std::runtime_error(what), m_budget(budget), coverage_fraction(coverage) {}
    int m_budget;
    double coverage_fraction;
};

/// Square bit image on the torus (Z/n)^2, row-major 64-bit words.
class TorusBitmap {
  public:
    TorusBitmap() = default;
    explicit TorusBitmap(int n);
    int n() const { return n_; }
    bool get(int x, int y) const;
    void set(int x, int y);
    bool full() const;
    bool empty() const;
    long count() const;
    /// this |= other shifted by (dx, dy) cyclically.
    void or_shifted(const TorusBitmap& other, int dx, int dy);
    TorusBitmap& operator|=(const TorusBitmap& other);
    std::vector<std::pair<int, int>> occupied() const;
    bool operator==(const TorusBitmap& o) const { return n_ == o.n_ && words_ == o.words_; }

  private:
    int n_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rasterized Abel-Jacobi image, one occupancy layer per component label.
/// `over` layers over-approximate the curve (cell supercover, thickened by
/// one cell); `under` layers contain only cells that certainly meet it.
struct TorusGrid {
    int g = 2;
    int n = 0;
    int label_bits = 0;  // occupancy maps live on (Z/2)^{label_bits}
    std::map<std::uint32_t, TorusBitmap> over;
    std::map<std::uint32_t, TorusBitmap> under;
};

TorusGrid rasterize(const std::vector<TorusPolyline>& polylines, int n);

struct CoverBracket {
    int m_lower = 0;  // coverage threshold of the thickened raster (spread sums)
    int m_upper = 0;  // coverage threshold of the certain raster (plain sums)
};

/// Iterated Minkowski sums with (Z/2)^{r-1} label bookkeeping until every
/// component of the real Jacobian is fully covered.  Throws
/// SimBudgetExceeded past m = 4n.
CoverBracket min_cover_m(const TorusGrid& grid, int r);

struct MidpointCheck {
    bool convex = false;
    double convexity_defect = 0.0;  // worst signed-area violation, if any
    double max_defect = 0.0;        // worst distance of a midpoint witness
};

/// For random interior points alpha of a closed convex planar polyline,
/// measures how well alpha is realized as a midpoint (gamma1 + gamma2)/2 of
/// two polyline points.  Deterministic for a fixed seed.
MidpointCheck midpoint_convexity_check(const std::vector<std::pair<double, double>>& polyline,
                                       int samples, unsigned seed = 0x5eed);

}  // namespace realdiv
