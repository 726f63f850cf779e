#include "realdiv/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "realdiv/linalg.hpp"

namespace realdiv {

void write_polyline_csv(std::ostream& os, const std::vector<TorusPolyline>& polylines) {
    os << "oval_id,s";
    if (!polylines.empty())
        for (int j = 0; j < polylines[0].g; ++j) os << ",x" << (j + 1);
    os << "\n";
    char buf[64];
    for (size_t id = 0; id < polylines.size(); ++id) {
        const auto& line = polylines[id];
        const Eigen::Index rows = line.points.rows();
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double s = rows > 1 ? static_cast<double>(i) / (rows - 1) : 0.0;
            std::snprintf(buf, sizeof buf, "%zu,%.10f", id, s);
            os << buf;
            for (int j = 0; j < line.g; ++j) {
                std::snprintf(buf, sizeof buf, ",%.10f", line.points(i, j));
                os << buf;
            }
            os << "\n";
        }
    }
}

namespace {

const char* kStroke[4] = {"#d62728", "#ff7f0e", "#e377c2", "#8c564b"};

struct View {
    double min_x, min_y, scale, height;
    double x(double vx) const { return (vx - min_x) * scale + 20.0; }
    double y(double vy) const { return height - ((vy - min_y) * scale + 20.0); }
};

}  // namespace

void write_polyline_svg(std::ostream& os, const std::vector<TorusPolyline>& polylines,
                        const Eigen::MatrixXd& T) {
    // Orthonormal coordinates: lattice coordinates x map to L x with
    // L^T L = T^{-1}; the unit cell maps to the fundamental parallelogram.
    const Eigen::MatrixXd B = spd_sqrt_factor(T);
    const Eigen::MatrixXd L = B.transpose().inverse();
    const Eigen::Vector2d c00 = L * Eigen::Vector2d(0, 0);
    const Eigen::Vector2d c10 = L * Eigen::Vector2d(1, 0);
    const Eigen::Vector2d c11 = L * Eigen::Vector2d(1, 1);
    const Eigen::Vector2d c01 = L * Eigen::Vector2d(0, 1);

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    auto grow = [&](const Eigen::Vector2d& p) {
        min_x = std::min(min_x, p.x());
        max_x = std::max(max_x, p.x());
        min_y = std::min(min_y, p.y());
        max_y = std::max(max_y, p.y());
    };
    grow(c00);
    grow(c10);
    grow(c11);
    grow(c01);

    std::vector<std::vector<Eigen::Vector2d>> runs;
    std::vector<size_t> run_line;
    for (size_t id = 0; id < polylines.size(); ++id) {
        const auto& line = polylines[id];
        const Eigen::Index rows = line.points.rows();
        const Eigen::RowVector2d lo = line.lift.colwise().minCoeff();
        const Eigen::RowVector2d hi = line.lift.colwise().maxCoeff();
        if ((hi - lo).maxCoeff() < 1.0 && line.closure_defect < 1e-3) {
            // Null-homologous image, small enough to fit in one cell: draw
            // the lift translated to the middle of the fundamental domain
            // (the customary shift when plotting such images).
            const Eigen::RowVector2d shift =
                Eigen::RowVector2d(0.5, 0.5) - 0.5 * (lo + hi);
            std::vector<Eigen::Vector2d> run;
            for (Eigen::Index i = 0; i < rows; ++i) {
                run.push_back(L * (line.lift.row(i) + shift).transpose());
                grow(run.back());
            }
            runs.push_back(std::move(run));
            run_line.push_back(id);
            continue;
        }
        // Winding image: draw the torus points, breaking runs at wraps.
        std::vector<Eigen::Vector2d> run;
        Eigen::Vector2d prev_mod(0, 0);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Eigen::Vector2d p(line.points(i, 0), line.points(i, 1));
            if (!run.empty() && (p - prev_mod).cwiseAbs().maxCoeff() > 0.5) {
                if (run.size() > 1) {
                    runs.push_back(run);
                    run_line.push_back(id);
                }
                run.clear();
            }
            prev_mod = p;
            run.push_back(L * p);
            grow(run.back());
        }
        if (run.size() > 1) {
            runs.push_back(std::move(run));
            run_line.push_back(id);
        }
    }

    const double span = std::max(max_x - min_x, max_y - min_y);
    const double scale = 560.0 / (span > 0 ? span : 1.0);
    const double width = (max_x - min_x) * scale + 40.0;
    const double height = (max_y - min_y) * scale + 40.0;
    View view{min_x, min_y, scale, height};

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    os << buf;
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const Eigen::Vector2d corners[5] = {c00, c10, c11, c01, c00};
    os << "<polyline fill=\"#eef3fb\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const auto& c : corners) {
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", view.x(c.x()), view.y(c.y()));
        os << buf;
    }
    os << "\"/>\n";

    for (size_t ri = 0; ri < runs.size(); ++ri) {
        const char* color = kStroke[polylines[run_line[ri]].component_label % 4];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (const auto& p : runs[ri]) {
            std::snprintf(buf, sizeof buf, "%.3f,%.3f ", view.x(p.x()), view.y(p.y()));
            os << buf;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

void write_pgm(std::ostream& os, const TorusBitmap& bitmap) {
    const int n = bitmap.n();
    os << "P5\n" << n << " " << n << "\n255\n";
    std::vector<unsigned char> row(static_cast<size_t>(n));
    for (int y = n - 1; y >= 0; --y) {  // image rows top-down, torus y up
        for (int x = 0; x < n; ++x) row[static_cast<size_t>(x)] = bitmap.get(x, y) ? 255 : 0;
        os.write(reinterpret_cast<const char*>(row.data()), n);
    }
}

}  // namespace realdiv
