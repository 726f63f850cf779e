// Command-line front end: period matrices, Jacobian invariants, Bergman
// lengths, threshold bounds, and the Minkowski-sum simulator for the two
// supported families of real hyperelliptic curves.
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical failure,
// 4 simulation budget exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "realdiv/bergman.hpp"
#include "realdiv/bounds.hpp"
#include "realdiv/curves.hpp"
#include "realdiv/jacobian.hpp"
#include "realdiv/json_io.hpp"
#include "realdiv/periods.hpp"
#include "realdiv/plot.hpp"
#include "realdiv/torus_sim.hpp"

namespace {

using nlohmann::json;
using namespace realdiv;

struct CurveOptions {
    double family_a_eps = 0.0;
    std::vector<double> family_a;
    std::vector<double> m_curve;
    std::string curve_file;
};

struct OutputOptions {
    std::string path;
    std::string format = "json";
    bool no_meta = false;
};

RealHyperellipticCurve resolve_curve(const CurveOptions& o) {
    int given = 0;
    given += o.family_a_eps > 0.0;
    given += !o.family_a.empty();
    given += !o.m_curve.empty();
    given += !o.curve_file.empty();
    if (given != 1)
        throw CurveError(
            "exactly one of --family-a-eps, --family-a, --m-curve, --curve is required");
    if (o.family_a_eps > 0.0) return make_family_a_eps(o.family_a_eps);
    if (!o.family_a.empty()) {
        if (o.family_a.size() != 3) throw CurveError("--family-a expects c1,c2,c3");
        return make_family_a(o.family_a[0], o.family_a[1], o.family_a[2]);
    }
    if (!o.m_curve.empty()) return make_m_curve(o.m_curve);
    std::ifstream in(o.curve_file);
    if (!in) throw CurveError("cannot open curve file " + o.curve_file);
    json j;
    in >> j;
    return curve_from_json(j);
}

void attach_meta(json& doc, const QuadratureSpec& spec, bool no_meta) {
    doc["quadrature"] = to_json(spec);
    doc["meta"] = {{"tool", "realdivisor"}, {"version", kToolVersion}};
    if (!no_meta) {
        const std::time_t t = std::time(nullptr);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        doc["meta"]["generated_at"] = stamp;
    }
}

void emit(const json& doc, const OutputOptions& out) {
    if (out.path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream os(out.path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out.path);
    os << doc.dump(2) << "\n";
}

std::string sibling_path(const std::string& base, const std::string& ext) {
    const auto dot = base.find_last_of('.');
    const auto slash = base.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + ext;
    return base.substr(0, dot) + ext;
}

json bounds_to_json(const XepsBounds& xb) {
    json j = to_json(xb.report);
    j["quarter_point"] = {{"u", xb.u}, {"v", xb.v}};
    j["side_lengths"] = {xb.ell1, xb.ell2};
    j["sandwich_consistent"] = sandwich_consistent(xb.report);
    return j;
}

void print_bounds_table(std::ostream& os, const BoundReport& rep) {
    os << "bounds for " << rep.curve_id << "\n";
    for (const auto& e : rep.entries) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(6);
        line << "  " << (e.kind == BoundKind::lower ? "lower " : "upper ") << e.value;
        os << line.str() << "  " << e.name << "  [" << e.validity << "]\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"numerical invariants of real hyperelliptic curves"};
    app.require_subcommand(1);

    CurveOptions curve_opt;
    OutputOptions out_opt;
    QuadratureSpec spec;
    double tol = 0.0;
    int grid_n = 512;
    int n_samples = 4096;
    bool simulate = false;
    double eps_flag = 0.0;

    auto add_common = [&](CLI::App* cmd, bool needs_curve) {
        if (needs_curve) {
            cmd->add_option("--family-a-eps", curve_opt.family_a_eps,
                            "one-parameter genus-2 family, 0 < eps < 1");
            cmd->add_option("--family-a", curve_opt.family_a, "family A parameters c1,c2,c3")
                ->delimiter(',');
            cmd->add_option("--m-curve", curve_opt.m_curve, "2g+2 distinct real roots")
                ->delimiter(',');
            cmd->add_option("--curve", curve_opt.curve_file, "curve JSON file");
        }
        cmd->add_option("--tol", tol, "absolute and relative quadrature tolerance");
        cmd->add_option("--out", out_opt.path, "output path (default stdout)");
        cmd->add_option("--format", out_opt.format, "json|csv|svg|text")
            ->check(CLI::IsMember({"json", "csv", "svg", "text"}));
        cmd->add_flag("--no-meta", out_opt.no_meta, "omit tool metadata from JSON output");
    };

    auto* periods_cmd = app.add_subcommand("periods", "Comessatti period matrix [I | M/2 + iT]");
    add_common(periods_cmd, true);
    auto* jacobian_cmd = app.add_subcommand("jacobian", "real Jacobian volumes and components");
    add_common(jacobian_cmd, true);
    auto* bergman_cmd =
        app.add_subcommand("bergman", "Bergman length and Abel-Jacobi image of the real locus");
    add_common(bergman_cmd, true);
    bergman_cmd->add_option("--samples", n_samples, "polyline samples per oval");
    auto* bounds_cmd = app.add_subcommand("bounds", "bounds on the totally real divisor threshold");
    add_common(bounds_cmd, true);
    bounds_cmd->add_option("--eps", eps_flag, "augment with the one-parameter family bounds");
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Minkowski-sum coverage bracket on a torus grid");
    add_common(simulate_cmd, true);
    simulate_cmd->add_option("--grid", grid_n, "grid resolution per axis");
    simulate_cmd->add_option("--samples", n_samples, "polyline samples per oval");
    auto* report_cmd = app.add_subcommand("report", "full pipeline report");
    add_common(report_cmd, true);
    report_cmd->add_option("--grid", grid_n, "grid resolution per axis");
    report_cmd->add_option("--samples", n_samples, "polyline samples per oval");
    report_cmd->add_flag("--simulate", simulate, "include the Minkowski-sum bracket");

    CLI11_PARSE(app, argc, argv);
    if (tol > 0.0) spec.abs_tol = spec.rel_tol = tol;
    if ((simulate_cmd->parsed() || report_cmd->parsed()) && (grid_n < 64 || grid_n % 64 != 0))
        throw CurveError("--grid must be a multiple of 64, at least 64");

    const auto curve = resolve_curve(curve_opt);
    const auto topo = topological_type(curve);

    if (periods_cmd->parsed()) {
        json doc = to_json(compute_periods(curve, spec));
        doc["curve"] = to_json(curve);
        attach_meta(doc, spec, out_opt.no_meta);
        emit(doc, out_opt);
        return 0;
    }

    if (jacobian_cmd->parsed()) {
        json doc = to_json(vol_real(compute_periods(curve, spec)));
        doc["curve"] = to_json(curve);
        attach_meta(doc, spec, out_opt.no_meta);
        emit(doc, out_opt);
        return 0;
    }

    if (bergman_cmd->parsed()) {
        const auto periods = compute_periods(curve, spec);
        const auto lines = abel_jacobi_real_polyline(curve, periods, n_samples, spec);
        if (out_opt.format == "csv") {
            if (out_opt.path.empty()) {
                write_polyline_csv(std::cout, lines);
            } else {
                std::ofstream os(out_opt.path, std::ios::binary);
                write_polyline_csv(os, lines);
            }
            return 0;
        }
        if (out_opt.format == "svg") {
            if (topo.g != 2) throw CurveError("svg output requires genus 2");
            if (out_opt.path.empty()) {
                write_polyline_svg(std::cout, lines, periods.T);
            } else {
                std::ofstream os(out_opt.path, std::ios::binary);
                write_polyline_svg(os, lines, periods.T);
            }
            return 0;
        }
        json doc;
        doc["curve"] = to_json(curve);
        doc["length"] = real_locus_length(curve, periods, spec);
        json jl = json::array();
        for (const auto& l : lines) jl.push_back(to_json(l));
        doc["polylines"] = std::move(jl);
        attach_meta(doc, spec, out_opt.no_meta);
        emit(doc, out_opt);
        return 0;
    }

    if (bounds_cmd->parsed()) {
        const auto periods = compute_periods(curve, spec);
        const auto jac = vol_real(periods);
        const double len = real_locus_length(curve, periods, spec);

        BoundReport rep;
        rep.curve_id = curve.id();
        rep.entries.push_back({"metric_lower", BoundKind::lower,
                               metric_lower_bound(topo.g, topo.r, jac.vol_identity, len),
                               "any smooth real curve", "volume/length estimate"});
        if (topo.r == 1)
            rep.entries.push_back({"metric_lower_r1", BoundKind::lower,
                                   metric_lower_bound_r1(topo.g, jac.vol_total, len),
                                   "connected real locus", "volume/length estimate, r = 1"});
        if (auto ub = upper_bound_many_ovals(topo.g, topo.r))
            rep.entries.push_back({"many_ovals_upper", BoundKind::upper, *ub,
                                   "r = g or r = g+1", "divisor shuffling on g ovals"});
        json doc = to_json(rep);
        doc["sandwich_consistent"] = sandwich_consistent(rep);
        if (eps_flag > 0.0) doc["xeps"] = bounds_to_json(xeps_bounds(eps_flag, spec));
        doc["curve"] = to_json(curve);
        attach_meta(doc, spec, out_opt.no_meta);
        if (out_opt.format == "text") {
            print_bounds_table(std::cout, rep);
            return 0;
        }
        emit(doc, out_opt);
        return 0;
    }

    if (simulate_cmd->parsed()) {
        const auto periods = compute_periods(curve, spec);
        if (periods.g != 2) throw SimError("simulate requires genus 2");
        const auto lines = abel_jacobi_real_polyline(curve, periods, n_samples, spec);
        const auto grid = rasterize(lines, grid_n);
        const auto bracket = min_cover_m(grid, topo.r);
        json doc = to_json(bracket);
        doc["grid_n"] = grid_n;
        doc["curve"] = to_json(curve);
        attach_meta(doc, spec, out_opt.no_meta);
        if (!out_opt.path.empty()) {
            for (const auto& [label, bm] : grid.over) {
                std::ofstream os(sibling_path(out_opt.path, "_label" + std::to_string(label) +
                                                                ".pgm"),
                                 std::ios::binary);
                write_pgm(os, bm);
            }
        }
        emit(doc, out_opt);
        return 0;
    }

    // report: the full pipeline.
    const auto periods = compute_periods(curve, spec);
    const auto jac = vol_real(periods);
    const double len = real_locus_length(curve, periods, spec);
    const auto lines = abel_jacobi_real_polyline(curve, periods, n_samples, spec);

    json doc;
    doc["curve"] = to_json(curve);
    doc["periods"] = to_json(periods);
    doc["jacobian"] = to_json(jac);
    doc["bergman"] = {{"length", len}};

    BoundReport rep;
    rep.curve_id = curve.id();
    rep.entries.push_back({"metric_lower", BoundKind::lower,
                           metric_lower_bound(topo.g, topo.r, jac.vol_identity, len),
                           "any smooth real curve", "volume/length estimate"});
    if (topo.r == 1)
        rep.entries.push_back({"metric_lower_r1", BoundKind::lower,
                               metric_lower_bound_r1(topo.g, jac.vol_total, len), "connected real locus",
                               "volume/length estimate, r = 1"});
    if (auto ub = upper_bound_many_ovals(topo.g, topo.r))
        rep.entries.push_back({"many_ovals_upper", BoundKind::upper, *ub, "r = g or r = g+1",
                               "divisor shuffling on g ovals"});
    if (curve.family() == CurveFamily::family_a && curve.params()[1] == 1.0 &&
        std::fabs(std::sqrt(curve.params()[0]) + std::sqrt(curve.params()[2]) - 2.0) < 1e-12) {
        const double eps = 1.0 - std::sqrt(curve.params()[0]);
        if (eps > 0.0 && eps < 1.0) doc["xeps"] = bounds_to_json(xeps_bounds(eps, spec));
    }
    doc["bounds"] = to_json(rep);
    doc["sandwich_consistent"] = sandwich_consistent(rep);

    if (simulate) {
        const auto grid = rasterize(lines, grid_n);
        const auto bracket = min_cover_m(grid, topo.r);
        json sim = to_json(bracket);
        sim["grid_n"] = grid_n;
        doc["simulate"] = std::move(sim);
    }
    attach_meta(doc, spec, out_opt.no_meta);
    emit(doc, out_opt);
    if (!out_opt.path.empty() && topo.g == 2) {
        std::ofstream os(sibling_path(out_opt.path, ".svg"), std::ios::binary);
        write_polyline_svg(os, lines, periods.T);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SimBudgetExceeded& e) {
        json diag{{"error", e.what()},
                  {"m_budget", e.m_budget},
                  {"coverage_fraction", e.coverage_fraction}};
        std::cerr << diag.dump(2) << "\n";
        return 4;
    } catch (const CurveError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        json diag{{"error", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 3;
    }
}
