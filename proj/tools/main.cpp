// sol3 command-line tool: verify minimality over a grid, sample surfaces to
// OBJ/CSV, print curvature reports, and run the built-in selfcheck suite.
//
// Exit codes: 0 success/pass, 1 quantitative failure, 2 usage/parse/domain
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sol3/families.hpp"
#include "sol3/selfcheck.hpp"
#include "sol3/solutions.hpp"
#include "sol3/surface.hpp"
#include "sol3/verify.hpp"

#include "curve_spec.hpp"
#include "format.hpp"
#include "mesh_io.hpp"

namespace {

using sol3cli::fmt;

struct SurfaceArgs {
    std::string solution;
    std::string type;
    std::string f_spec;
    std::string g_spec;
};

struct GridArgs {
    std::string s_range;
    std::string t_range;
    int ns = 50;
    int nt = 50;
};

struct NamedSurface {
    std::string label;
    sol3::Immersion immersion;
};

NamedSurface resolve_surface(const SurfaceArgs& args) {
    const bool have_solution = !args.solution.empty();
    const bool have_type = !args.type.empty();
    if (have_solution == have_type) {
        throw sol3cli::SpecError(
            "specify exactly one of --solution or --type (with --f and --g)");
    }
    if (have_solution) {
        std::optional<std::string> f;
        if (!args.f_spec.empty()) f = args.f_spec;
        const sol3::SolutionSpec spec = sol3cli::parse_solution(args.solution, f);
        return {sol3::solution_name(spec), sol3::materialize(spec)};
    }
    if (args.f_spec.empty() || args.g_spec.empty()) {
        throw sol3cli::SpecError("--type needs both --f and --g curve specs");
    }
    const sol3::TranslationType type = sol3::parse_translation_type(args.type);
    auto surf = sol3::build_surface(type, sol3cli::parse_curve(args.f_spec),
                                    sol3cli::parse_curve(args.g_spec));
    return {"type-" + sol3::to_string(type) + " custom", std::move(surf.immersion)};
}

sol3::GridSpec resolve_grid(const sol3::Immersion& imm, const GridArgs& args) {
    sol3::GridSpec grid = sol3::default_grid(imm);
    if (!args.s_range.empty()) grid.s = sol3cli::parse_range(args.s_range);
    if (!args.t_range.empty()) grid.t = sol3cli::parse_range(args.t_range);
    grid.ns = args.ns;
    grid.nt = args.nt;
    return grid;
}

std::string interval_text(const sol3::Interval& r) {
    return "[" + fmt(r.lo) + ", " + fmt(r.hi) + "]";
}

int run_verify(const SurfaceArgs& sargs, const GridArgs& gargs, double tol, bool json) {
    const NamedSurface surf = resolve_surface(sargs);
    const sol3::GridSpec grid = resolve_grid(surf.immersion, gargs);
    const sol3::VerifyReport rep = sol3::verify_surface(surf.immersion, grid, tol);
    if (json) {
        nlohmann::ordered_json doc;
        doc["surface"] = surf.label;
        doc["grid"] = {{"s", {grid.s.lo, grid.s.hi}},
                       {"t", {grid.t.lo, grid.t.hi}},
                       {"ns", grid.ns},
                       {"nt", grid.nt},
                       {"margin", grid.margin}};
        doc["n_evaluated"] = rep.n_evaluated;
        doc["max_abs_H"] = rep.max_abs_H;
        doc["mean_abs_H"] = rep.mean_abs_H;
        doc["worst_point"] = {rep.worst_s, rep.worst_t};
        doc["tolerance"] = rep.tolerance;
        doc["pass"] = rep.pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "surface: " << surf.label << "\n"
                  << "grid: s in " << interval_text(grid.s) << " x t in "
                  << interval_text(grid.t) << ", " << grid.ns << " x " << grid.nt
                  << " nodes, margin " << fmt(grid.margin) << "\n"
                  << "evaluated: " << rep.n_evaluated << " nodes\n"
                  << "max |H|: " << fmt(rep.max_abs_H) << " at (s, t) = ("
                  << fmt(rep.worst_s) << ", " << fmt(rep.worst_t) << ")\n"
                  << "mean |H|: " << fmt(rep.mean_abs_H) << "\n"
                  << "tolerance: " << fmt(rep.tolerance) << "\n"
                  << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

int run_sample(const SurfaceArgs& sargs, const GridArgs& gargs, const std::string& format,
               const std::string& out_path) {
    const NamedSurface surf = resolve_surface(sargs);
    const sol3::GridSpec grid = resolve_grid(surf.immersion, gargs);
    const sol3cli::MeshGrid mesh = sol3cli::mesh_grid(surf.immersion, grid);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::domain_error("cannot open output file '" + out_path + "'");
    }
    if (format == "obj") {
        sol3cli::write_obj(out, surf.immersion, mesh);
    } else if (format == "csv") {
        sol3cli::write_csv(out, surf.immersion, mesh);
    } else {
        throw sol3cli::SpecError("unknown format '" + format + "' (expected obj or csv)");
    }
    out.flush();
    if (!out) {
        throw std::domain_error("write failed for '" + out_path + "'");
    }
    std::cout << "wrote " << format << " to " << out_path << " ("
              << mesh.s_nodes.size() << " x " << mesh.t_nodes.size() << " nodes)\n";
    return 0;
}

int run_curvature(const SurfaceArgs& sargs, double s, double t, bool json) {
    const NamedSurface surf = resolve_surface(sargs);
    sol3::CurvatureReport rep;
    double h_fd = 0.0;
    try {
        rep = sol3::mean_curvature(surf.immersion, s, t);
        h_fd = sol3::fd_mean_curvature(surf.immersion, s, t);
    } catch (const sol3::SingularPoint& e) {
        std::cerr << "singular point: " << e.what() << "\n";
        return 1;
    }
    if (json) {
        nlohmann::ordered_json doc;
        doc["surface"] = surf.label;
        doc["point"] = {s, t};
        doc["H"] = rep.H;
        doc["residual"] = rep.residual;
        doc["norm_N"] = rep.norm_N;
        doc["det1"] = rep.det1;
        doc["H_fd"] = h_fd;
        doc["difference"] = h_fd - rep.H;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "surface: " << surf.label << "\n"
                  << "point: (s, t) = (" << fmt(s) << ", " << fmt(t) << ")\n"
                  << "H: " << fmt(rep.H) << "\n"
                  << "residual (G l - 2F m + E n): " << fmt(rep.residual) << "\n"
                  << "|N|: " << fmt(rep.norm_N) << "\n"
                  << "EG - F^2: " << fmt(rep.det1) << "\n"
                  << "H (FD oracle): " << fmt(h_fd) << "\n"
                  << "difference: " << fmt(h_fd - rep.H) << "\n";
    }
    return 0;
}

int run_selftest(std::optional<double> tol_override) {
    sol3::SelfCheckOptions opts;
    opts.tol_override = tol_override;
    const auto results = sol3::run_selfcheck(opts);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << "[" << (r.id < 10 ? " " : "") << r.id << "/" << results.size() << "] "
                  << (r.pass ? "PASS" : "FAIL") << " " << r.name << " | worst err/tol "
                  << fmt(r.worst) << " | " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    std::cout << "selftest: " << passed << "/" << results.size() << " checks passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"minimal translation surfaces in the Sol3 geometry"};
    app.require_subcommand(1);

    SurfaceArgs sargs;
    GridArgs gargs;
    double tol = 1e-8;
    bool json = false;
    std::string format = "obj";
    std::string out_path;
    double point_s = 0.0, point_t = 0.0;
    std::optional<double> selftest_tol;

    const auto add_surface_opts = [&sargs](CLI::App* cmd) {
        cmd->add_option("--solution", sargs.solution,
                        "catalog solution, e.g. type1-scherk(2,0,1)");
        cmd->add_option("--type", sargs.type, "translation-surface type I..VI");
        cmd->add_option("--f", sargs.f_spec, "profile curve of alpha, e.g. affine(1,0)");
        cmd->add_option("--g", sargs.g_spec, "profile curve of beta, e.g. log(0.5,0)");
    };
    const auto add_grid_opts = [&gargs](CLI::App* cmd) {
        cmd->add_option("--s-range", gargs.s_range, "s range as lo:hi");
        cmd->add_option("--t-range", gargs.t_range, "t range as lo:hi");
        cmd->add_option("--ns", gargs.ns, "grid nodes along s")->check(CLI::Range(2, 100000));
        cmd->add_option("--nt", gargs.nt, "grid nodes along t")->check(CLI::Range(2, 100000));
    };

    CLI::App* verify = app.add_subcommand("verify", "check max |H| over a grid");
    add_surface_opts(verify);
    add_grid_opts(verify);
    verify->add_option("--tol", tol, "pass threshold for max |H|");
    verify->add_flag("--json", json, "machine-readable report");

    CLI::App* sample = app.add_subcommand("sample", "export a sampled mesh or table");
    add_surface_opts(sample);
    add_grid_opts(sample);
    sample->add_option("--format", format, "obj or csv");
    sample->add_option("--out", out_path, "output file path")->required();

    CLI::App* curvature = app.add_subcommand("curvature", "curvature report at one point");
    add_surface_opts(curvature);
    curvature->add_option("--s", point_s, "s parameter");
    curvature->add_option("--t", point_t, "t parameter");
    curvature->add_flag("--json", json, "machine-readable report");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in check suite");
    double selftest_tol_value = 0.0;
    CLI::Option* selftest_tol_opt =
        selftest->add_option("--tol", selftest_tol_value, "override every check tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(sargs, gargs, tol, json);
        if (sample->parsed()) return run_sample(sargs, gargs, format, out_path);
        if (curvature->parsed()) return run_curvature(sargs, point_s, point_t, json);
        if (selftest->parsed()) {
            if (selftest_tol_opt->count() > 0) selftest_tol = selftest_tol_value;
            return run_selftest(selftest_tol);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
} catch (...) {
    std::cerr << "error: unknown failure\n";
    return 2;
}
