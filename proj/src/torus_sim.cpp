#include "realdiv/torus_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace realdiv {

TorusBitmap::TorusBitmap(int n) : n_(n), words_per_row_(n / 64) {
    // Row rotation works on whole 64-bit words; keeping n a multiple of 64
    // makes the word ring and the bit ring coincide.
    if (n < 64 || n % 64 != 0)
        throw SimError("TorusBitmap: resolution must be a positive multiple of 64");
    words_.assign(static_cast<size_t>(n_) * words_per_row_, 0);
}

bool TorusBitmap::get(int x, int y) const {
    return (words_[static_cast<size_t>(x) * words_per_row_ + y / 64] >> (y % 64)) & 1u;
}

void TorusBitmap::set(int x, int y) {
    words_[static_cast<size_t>(x) * words_per_row_ + y / 64] |= (std::uint64_t{1} << (y % 64));
}

bool TorusBitmap::full() const {
    for (auto w : words_)
        if (w != ~std::uint64_t{0}) return false;
    return true;
}

bool TorusBitmap::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

long TorusBitmap::count() const {
    long c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

void TorusBitmap::or_shifted(const TorusBitmap& other, int dx, int dy) {
    dx = ((dx % n_) + n_) % n_;
    dy = ((dy % n_) + n_) % n_;
    const int wshift = dy / 64;
    const int bshift = dy % 64;
    const int wpr = words_per_row_;
    for (int x = 0; x < n_; ++x) {
        const std::uint64_t* src = &other.words_[static_cast<size_t>(x) * wpr];
        std::uint64_t* dst = &words_[static_cast<size_t>((x + dx) % n_) * wpr];
        // Rotate the n-bit row left by dy: destination word w collects bits
        // from source words (w - wshift) and (w - wshift - 1) mod the row.
        for (int w = 0; w < wpr; ++w) {
            auto row_word = [&](int idx) -> std::uint64_t {
                idx %= wpr;
                if (idx < 0) idx += wpr;
                return src[idx];
            };
            if (bshift == 0) {
                dst[w] |= row_word(w - wshift);
            } else {
                dst[w] |= (row_word(w - wshift) << bshift) |
                          (row_word(w - wshift - 1) >> (64 - bshift));
            }
        }
    }
}

std::vector<std::pair<int, int>> TorusBitmap::occupied() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (get(x, y)) out.emplace_back(x, y);
    return out;
}

TorusBitmap& TorusBitmap::operator|=(const TorusBitmap& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

namespace {

int wrap_cell(double v, int n) {
    double f = v - std::floor(v);
    int c = static_cast<int>(f * n);
    return c >= n ? n - 1 : c;
}

// Marks all cells the segment from p to q crosses (supercover on the torus).
// Segments are short relative to the grid, so simple parameter sampling at a
// sub-cell step is exact enough once followed by the one-cell thickening.
void mark_segment(TorusBitmap& bm, double px, double py, double qx, double qy) {
    const int n = bm.n();
    const double dx = qx - px, dy = qy - py;
    const double len = std::max(std::fabs(dx), std::fabs(dy)) * n;
    const int steps = std::max(1, static_cast<int>(std::ceil(len * 4.0)));
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        bm.set(wrap_cell(px + t * dx, n), wrap_cell(py + t * dy, n));
    }
}

TorusBitmap thicken(const TorusBitmap& bm) {
    TorusBitmap out = bm;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
            if (dx || dy) out.or_shifted(bm, dx, dy);
    return out;
}

// S := Minkowski sum of S and base on the torus grid.  With spread, each
// cell sum also marks the +1 neighbours, so cell arithmetic over-approximates
// the true set sum; without, the plain cell sums.
TorusBitmap dilate(const TorusBitmap& S, const std::vector<std::pair<int, int>>& base_cells,
                   bool spread) {
    TorusBitmap out(S.n());
    for (auto [dx, dy] : base_cells) {
        out.or_shifted(S, dx, dy);
        if (spread) {
            out.or_shifted(S, dx + 1, dy);
            out.or_shifted(S, dx, dy + 1);
            out.or_shifted(S, dx + 1, dy + 1);
        }
    }
    return out;
}

struct LabeledSet {
    std::map<std::uint32_t, TorusBitmap> layers;
};

bool all_labels_full(const LabeledSet& s, int label_bits) {
    const std::uint32_t total = 1u << label_bits;
    if (s.layers.size() != total) return false;
    for (const auto& [label, bm] : s.layers)
        if (!bm.full()) return false;
    return true;
}

double coverage_fraction(const LabeledSet& s, int label_bits, int n) {
    const double total = std::ldexp(static_cast<double>(n) * n, label_bits);
    double c = 0;
    for (const auto& [label, bm] : s.layers) c += static_cast<double>(bm.count());
    return c / total;
}

int cover_threshold(const std::map<std::uint32_t, TorusBitmap>& base, int label_bits, int n,
                    bool spread, int m_max) {
    std::map<std::uint32_t, std::vector<std::pair<int, int>>> base_cells;
    for (const auto& [label, bm] : base) base_cells[label] = bm.occupied();

    LabeledSet S;
    S.layers = base;
    for (int m = 1; m <= m_max; ++m) {
        if (all_labels_full(S, label_bits)) return m;
        if (m == m_max) break;
        LabeledSet next;
        for (const auto& [ls, bs] : S.layers) {
            for (const auto& [lb, cells] : base_cells) {
                const std::uint32_t lo = ls ^ lb;
                auto [it, fresh] = next.layers.try_emplace(lo, TorusBitmap(n));
                (void)fresh;
                it->second |= dilate(bs, cells, spread);
            }
        }
        S = std::move(next);
    }
    throw SimBudgetExceeded("min_cover_m: no coverage within the step budget", m_max,
                            coverage_fraction(S, label_bits, n));
}

}  // namespace

TorusGrid rasterize(const std::vector<TorusPolyline>& polylines, int n) {
    if (polylines.empty()) throw SimError("rasterize: no polylines");
    if (n < 64 || n % 64 != 0)
        throw SimError("rasterize: grid resolution must be a multiple of 64, at least 64");
    for (const auto& line : polylines)
        if (line.g != 2) throw SimError("rasterize: only g = 2 grids are supported");

    TorusGrid grid;
    grid.g = 2;
    grid.n = n;
    std::uint32_t max_label = 0;
    for (const auto& line : polylines) max_label |= line.component_label;
    grid.label_bits = 0;
    while ((1u << grid.label_bits) <= max_label) ++grid.label_bits;

    for (const auto& line : polylines) {
        auto [uit, u_ins] = grid.under.try_emplace(line.component_label, TorusBitmap(n));
        auto [oit, o_ins] = grid.over.try_emplace(line.component_label, TorusBitmap(n));
        TorusBitmap& under = uit->second;
        TorusBitmap& over = oit->second;
        // `under` holds only cells containing an exact curve sample; segments
        // are traced on the lift so wrap jumps never smear across the torus.
        for (Eigen::Index i = 0; i < line.lift.rows(); ++i)
            under.set(wrap_cell(line.lift(i, 0), n), wrap_cell(line.lift(i, 1), n));
        for (Eigen::Index i = 1; i < line.lift.rows(); ++i)
            mark_segment(over, line.lift(i - 1, 0), line.lift(i - 1, 1), line.lift(i, 0),
                         line.lift(i, 1));
    }
    for (auto& [label, bm] : grid.over) bm = thicken(bm);
    return grid;
}

CoverBracket min_cover_m(const TorusGrid& grid, int r) {
    if (grid.under.empty()) throw SimError("min_cover_m: empty grid");
    if (r < 1) throw SimError("min_cover_m: r must be positive");
    const int label_bits = r - 1;
    if (grid.label_bits > label_bits)
        throw SimError("min_cover_m: grid labels exceed (Z/2)^{r-1}");
    const int m_max = 4 * grid.n;
    CoverBracket out;
    out.m_lower = cover_threshold(grid.over, label_bits, grid.n, /*spread=*/true, m_max);
    out.m_upper = cover_threshold(grid.under, label_bits, grid.n, /*spread=*/false, m_max);
    return out;
}

MidpointCheck midpoint_convexity_check(const std::vector<std::pair<double, double>>& polyline,
                                       int samples, unsigned seed) {
    if (polyline.size() < 3) throw SimError("midpoint_convexity_check: degenerate polyline");
    const size_t n = polyline.size();
    MidpointCheck res;

    // Convexity scan: all cross products of consecutive edges share a sign,
    // up to a tolerance relative to the polyline scale.
    double scale = 0.0;
    for (auto [x, y] : polyline) scale = std::max({scale, std::fabs(x), std::fabs(y)});
    double worst_neg = 0.0, worst_pos = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = polyline[i];
        const auto& b = polyline[(i + 1) % n];
        const auto& c = polyline[(i + 2) % n];
        const double cross = (b.first - a.first) * (c.second - b.second) -
                             (b.second - a.second) * (c.first - b.first);
        worst_neg = std::min(worst_neg, cross);
        worst_pos = std::max(worst_pos, cross);
    }
    const double tol = 1e-12 * scale * scale;
    res.convexity_defect = std::min(-worst_neg, worst_pos);
    res.convex = (worst_neg >= -tol) || (worst_pos <= tol);
    if (!res.convex) return res;

    // Interior samples: rejection-sample the bounding box against the
    // even-odd rule, then find the best midpoint witness.
    double lox = polyline[0].first, hix = lox, loy = polyline[0].second, hiy = loy;
    for (auto [x, y] : polyline) {
        lox = std::min(lox, x);
        hix = std::max(hix, x);
        loy = std::min(loy, y);
        hiy = std::max(hiy, y);
    }
    auto inside = [&](double px, double py) {
        bool in = false;
        for (size_t i = 0, j = n - 1; i < n; j = i++) {
            const auto& a = polyline[i];
            const auto& b = polyline[j];
            if ((a.second > py) != (b.second > py) &&
                px < (b.first - a.first) * (py - a.second) / (b.second - a.second) + a.first)
                in = !in;
        }
        return in;
    };
    auto dist_to_polyline = [&](double px, double py) {
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            const auto& a = polyline[i];
            const auto& b = polyline[(i + 1) % n];
            const double vx = b.first - a.first, vy = b.second - a.second;
            const double wx = px - a.first, wy = py - a.second;
            const double vv = vx * vx + vy * vy;
            double t = vv > 0 ? (wx * vx + wy * vy) / vv : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            const double ex = wx - t * vx, ey = wy - t * vy;
            best = std::min(best, ex * ex + ey * ey);
        }
        return std::sqrt(best);
    };

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ux(lox, hix), uy(loy, hiy);
    int accepted = 0;
    double max_defect = 0.0;
    int guard = 0;
    while (accepted < samples && guard < samples * 1000) {
        ++guard;
        const double px = ux(rng), py = uy(rng);
        if (!inside(px, py)) continue;
        ++accepted;
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            // gamma1 a vertex, gamma2 the reflected point 2 alpha - gamma1
            const double rx = 2.0 * px - polyline[i].first;
            const double ry = 2.0 * py - polyline[i].second;
            best = std::min(best, dist_to_polyline(rx, ry));
            if (best == 0.0) break;
        }
        max_defect = std::max(max_defect, best / 2.0);
    }
    if (accepted < samples)
        throw SimError("midpoint_convexity_check: interior sampling failed");
    res.max_defect = max_defect;
    return res;
}

}  // namespace realdiv
