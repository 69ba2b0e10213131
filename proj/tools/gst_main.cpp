// gst - generalised Sierpinski triangle toolkit command line front end.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gst/attractor.hpp"
#include "gst/dimension.hpp"
#include "gst/geometry.hpp"
#include "gst/ifs.hpp"
#include "gst/tiling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConsistency = 4;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Bare relative output names land in $GST_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("GST_OUTPUT_DIR")) {
            return std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void write_file(const std::string& path, const std::string& data) {
    const std::filesystem::path full = resolve_output(path);
    std::ofstream out(full, std::ios::binary);
    if (!out) {
        throw gst::IOFailure("cannot open '" + full.string() + "' for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw gst::IOFailure("short write to '" + full.string() + "'");
    }
}

struct CommonArgs {
    std::string family = "NNN";
    double a = 1.0;
    double b = 1.0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--family", args.family, "triangle family: NNN, FNN, FFN or FFF")
        ->required();
    cmd->add_option("--a", args.a, "side length a = |BC|")->required();
    cmd->add_option("--b", args.b, "side length b = |AC|")->required();
}

gst::Viewport parse_viewport(const std::string& text) {
    std::istringstream in(text);
    gst::Viewport v;
    if (!(in >> v.xmin >> v.ymin >> v.xmax >> v.ymax)) {
        throw gst::BadViewport("viewport must be four decimals: xmin ymin xmax ymax");
    }
    return v;
}

int run_info(const CommonArgs& args) {
    const gst::TriangleParams params{args.a, args.b};
    const gst::Family family = gst::parse_family(args.family);
    const gst::SierpinskiIFS ifs = gst::build_ifs(family, params);
    const gst::TriangleClass cls = gst::classify(params);
    const gst::OscReport osc = gst::osc_witness(ifs);
    const gst::OverlapPoints overlap = gst::overlap_points(ifs);
    std::cout << "family " << gst::to_string(family) << '\n'
              << "a " << fmt(args.a) << '\n'
              << "b " << fmt(args.b) << '\n'
              << "vertex_c " << fmt(ifs.apex.x) << ' ' << fmt(ifs.apex.y) << '\n'
              << "classification " << gst::to_string(cls.kind) << '\n'
              << "alpha " << fmt(ifs.ratios.alpha) << '\n'
              << "beta " << fmt(ifs.ratios.beta) << '\n'
              << "gamma " << fmt(ifs.ratios.gamma) << '\n'
              << "overlap_m " << fmt(overlap.m.x) << ' ' << fmt(overlap.m.y) << '\n'
              << "overlap_n " << fmt(overlap.n.x) << ' ' << fmt(overlap.n.y) << '\n'
              << "overlap_o " << fmt(overlap.o.x) << ' ' << fmt(overlap.o.y) << '\n'
              << "osc " << (osc.pass ? "pass" : std::string("fail ") + osc.detail) << '\n';
    return kExitOk;
}

int run_check(const CommonArgs& args);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalised Sierpinski triangle toolkit"};
    app.require_subcommand(1);

    // info
    auto* info_cmd = app.add_subcommand("info", "print ratios, apex, classification and OSC");
    CommonArgs info_args;
    add_common(info_cmd, info_args);

    // dimension
    auto* dim_cmd = app.add_subcommand("dimension", "Moran-Hutchinson dimension of one triangle");
    CommonArgs dim_args;
    add_common(dim_cmd, dim_args);
    double dim_tol = gst::tol::solver;
    dim_cmd->add_option("--tol", dim_tol, "solver residual tolerance");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "dimension sweep over b, CSV output");
    std::string scan_family = "FNN";
    double scan_bmin = 0.5, scan_bmax = 2.0, scan_a = std::nan("");
    int scan_steps = 101;
    std::string scan_out;
    scan_cmd->add_option("--family", scan_family)->required();
    scan_cmd->add_option("--bmin", scan_bmin)->required();
    scan_cmd->add_option("--bmax", scan_bmax)->required();
    scan_cmd->add_option("--steps", scan_steps)->required();
    scan_cmd->add_option("--a", scan_a, "fixed side a (default: per-point a = max(1, b))");
    scan_cmd->add_option("-o,--output", scan_out, "CSV path (stdout when omitted)");

    // scan2d
    auto* scan2_cmd = app.add_subcommand("scan2d", "dimension sweep over (a, b), CSV output");
    std::string scan2_family = "FFN";
    double scan2_amin = 0.8, scan2_amax = 1.2, scan2_bmin = 0.8, scan2_bmax = 1.2;
    int scan2_steps = 21;
    std::string scan2_out;
    scan2_cmd->add_option("--family", scan2_family)->required();
    scan2_cmd->add_option("--amin", scan2_amin)->required();
    scan2_cmd->add_option("--amax", scan2_amax)->required();
    scan2_cmd->add_option("--bmin", scan2_bmin)->required();
    scan2_cmd->add_option("--bmax", scan2_bmax)->required();
    scan2_cmd->add_option("--steps", scan2_steps, "grid steps per axis")->required();
    scan2_cmd->add_option("-o,--output", scan2_out, "CSV path (stdout when omitted)");

    // render
    auto* render_cmd = app.add_subcommand("render", "rasterise an attractor to PGM or SVG");
    CommonArgs render_args;
    add_common(render_cmd, render_args);
    std::string render_mode = "cover";
    int render_depth = 8;
    std::size_t render_points = 100000;
    std::uint64_t render_seed = 1;
    int render_burn_in = 20;
    bool render_uniform = false;
    int render_width = 512, render_height = 512;
    int render_depth_cap = gst::kDefaultDepthCap;
    std::string render_viewport, render_format = "pgm", render_out;
    render_cmd->add_option("--mode", render_mode, "cover or chaos")
        ->check(CLI::IsMember({"cover", "chaos"}));
    render_cmd->add_option("--depth", render_depth, "subdivision depth (cover mode)");
    render_cmd->add_option("--points", render_points, "orbit length (chaos mode)");
    render_cmd->add_option("--seed", render_seed, "chaos game seed");
    render_cmd->add_option("--burn-in", render_burn_in, "discarded leading iterates");
    render_cmd->add_flag("--uniform-selection", render_uniform,
                         "pick maps uniformly instead of by squared ratio");
    render_cmd->add_option("--width", render_width);
    render_cmd->add_option("--height", render_height);
    render_cmd->add_option("--viewport", render_viewport,
                           "\"xmin ymin xmax ymax\" (default: hull bounding box)");
    render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"pgm", "svg"}));
    render_cmd->add_option("--depth-cap", render_depth_cap, "override the subdivision cap");
    render_cmd->add_option("-o,--output", render_out, "output path")->required();

    // tile
    auto* tile_cmd = app.add_subcommand("tile", "fractal tiling SVG and JSON manifest");
    std::string tile_family = "FFF";
    double tile_a = 0.0, tile_b = 0.0;
    std::vector<int> tile_algebraic;
    std::string tile_theta = "(1)";
    int tile_k = 3, tile_cap = 12;
    bool tile_check_disjoint = false;
    // Looser than the library default so side lengths entered as short
    // decimals still land on their prototile structure.
    double tile_algebraic_tol = 1e-6;
    std::string tile_out, tile_manifest;
    tile_cmd->add_option("--family", tile_family)->required();
    tile_cmd->add_option("--a", tile_a, "side length a");
    tile_cmd->add_option("--b", tile_b, "side length b");
    tile_cmd->add_option("--fff-algebraic", tile_algebraic,
                         "derive (a, b) from FFF exponents x y")
        ->expected(2);
    tile_cmd->add_option("--theta", tile_theta, "address stream, e.g. \"3(12)\"");
    tile_cmd->add_option("--k", tile_k, "tiling depth")->required();
    tile_cmd->add_option("--k-cap", tile_cap, "override the depth cap");
    tile_cmd->add_flag("--check-disjoint", tile_check_disjoint,
                       "verify pairwise tile disjointness");
    tile_cmd->add_option("--algebraic-tol", tile_algebraic_tol,
                         "ratio-power matching tolerance for prototile detection");
    tile_cmd->add_option("-o,--output", tile_out, "SVG path")->required();
    tile_cmd->add_option("--manifest", tile_manifest, "JSON manifest path");

    // check
    auto* check_cmd = app.add_subcommand("check", "run the construction invariant suite");
    CommonArgs check_args;
    add_common(check_cmd, check_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*info_cmd) return run_info(info_args);

        if (*dim_cmd) {
            const gst::Family family = gst::parse_family(dim_args.family);
            const gst::DimensionSample sample =
                gst::dimension_of(family, {dim_args.a, dim_args.b}, dim_tol);
            std::cout << "family " << gst::to_string(family) << '\n'
                      << "a " << fmt(sample.a) << '\n'
                      << "b " << fmt(sample.b) << '\n'
                      << "dimension " << fmt(sample.d) << '\n'
                      << "residual " << fmt(sample.residual) << '\n';
            return kExitOk;
        }

        if (*scan_cmd) {
            const gst::Family family = gst::parse_family(scan_family);
            const std::vector<gst::ScanPoint> points =
                gst::scan_1d(family, scan_bmin, scan_bmax, scan_steps, scan_a);
            std::ostringstream csv;
            gst::write_csv(csv, points);
            if (scan_out.empty()) {
                std::cout << csv.str();
            } else {
                write_file(scan_out, csv.str());
            }
            return kExitOk;
        }

        if (*scan2_cmd) {
            const gst::Family family = gst::parse_family(scan2_family);
            const gst::ScanGrid grid = gst::scan_2d(family, scan2_amin, scan2_amax, scan2_bmin,
                                                    scan2_bmax, scan2_steps);
            std::ostringstream csv;
            gst::write_csv(csv, grid.points);
            if (scan2_out.empty()) {
                std::cout << csv.str();
            } else {
                write_file(scan2_out, csv.str());
            }
            return kExitOk;
        }

        if (*render_cmd) {
            const gst::Family family = gst::parse_family(render_args.family);
            const gst::SierpinskiIFS ifs = gst::build_ifs(family, {render_args.a, render_args.b});
            const gst::Viewport viewport = render_viewport.empty()
                                               ? gst::hull_viewport(ifs)
                                               : parse_viewport(render_viewport);
            gst::Bitmap bitmap;
            std::string svg;
            if (render_mode == "chaos") {
                const gst::PointCloud cloud =
                    gst::chaos_game(ifs, render_points, render_seed, render_burn_in,
                                    render_uniform);
                if (render_format == "svg") {
                    throw gst::Unsupported("chaos mode renders to pgm only");
                }
                bitmap = gst::rasterize(cloud, viewport, render_width, render_height);
            } else {
                const gst::TriangleCover cover =
                    gst::deterministic_cover(ifs, render_depth, render_depth_cap);
                if (render_format == "svg") {
                    svg = gst::export_svg(cover);
                } else {
                    bitmap = gst::rasterize(cover, viewport, render_width, render_height);
                }
            }
            write_file(render_out, render_format == "svg" ? svg : gst::export_pgm(bitmap));
            return kExitOk;
        }

        if (*tile_cmd) {
            const gst::Family family = gst::parse_family(tile_family);
            gst::TriangleParams params{tile_a, tile_b};
            if (!tile_algebraic.empty()) {
                if (family != gst::Family::FFF) {
                    throw gst::Unsupported("--fff-algebraic applies to the FFF family");
                }
                params = gst::solve_fff_algebraic(tile_algebraic[0], tile_algebraic[1]);
            } else if (tile_a <= 0.0 || tile_b <= 0.0) {
                std::cerr << "either --a/--b or --fff-algebraic is required\n";
                return kExitUsage;
            }
            const gst::SierpinskiIFS ifs = gst::build_ifs(family, params);
            const gst::ThetaStream theta = gst::ThetaStream::parse(tile_theta);
            const gst::Tiling tiling = gst::make_tiling(ifs, theta, tile_k, tile_cap);
            const std::optional<gst::PrototileSet> prototiles =
                gst::algebraic_condition(ifs.ratios, tile_algebraic_tol);
            // Scale drift along a k-letter word compounds the per-ratio
            // detection slack, so widen the class guard accordingly.
            const double smallest =
                std::min({ifs.ratios.alpha, ifs.ratios.beta, ifs.ratios.gamma});
            const double class_tol =
                std::max(1e-9, 4.0 * tile_k * tile_algebraic_tol / smallest);
            const std::vector<int> classes =
                gst::prototile_classes(tiling, prototiles, class_tol);
            if (tile_check_disjoint) {
                const gst::DisjointnessReport report = gst::disjointness_report(tiling);
                if (!report.pass) {
                    throw gst::ConsistencyFailure("tiles " + report.worst_pair +
                                                  " overlap with relative area " +
                                                  fmt(report.max_relative_overlap));
                }
            }
            write_file(tile_out, gst::export_svg(tiling, classes));
            if (!tile_manifest.empty()) {
                write_file(tile_manifest, gst::manifest_json(ifs, tiling, prototiles, classes));
            }
            return kExitOk;
        }

        if (*check_cmd) return run_check(check_args);
    } catch (const gst::ConsistencyFailure& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const gst::DegenerateTriangle& e) {
        std::cerr << "domain violation: " << e.what() << '\n';
        return kExitDomain;
    } catch (const gst::FamilyDomainViolation& e) {
        std::cerr << "domain violation: " << e.what() << '\n';
        return kExitDomain;
    } catch (const gst::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

namespace {

// Re-derives every construction identity for the given parameters; exit 3 on
// domain rejection, 4 on any violated identity.
int run_check(const CommonArgs& args) {
    const gst::Family family = gst::parse_family(args.family);
    const gst::TriangleParams params{args.a, args.b};

    const gst::SierpinskiIFS ifs = gst::build_ifs(family, params); // fixed points, similitudes
    std::cout << "ok construction identities\n";

    gst::overlap_points(ifs);
    std::cout << "ok overlap consistency\n";

    const std::array<double, 3> ratios = ifs.ratios.as_array();
    const auto side_residual = [&]() {
        const double a = params.a;
        const double b = params.b;
        const double al = ratios[0], be = ratios[1], ga = ratios[2];
        switch (family) {
        case gst::Family::NNN:
            return std::max({std::fabs(al + be - 1.0), std::fabs(al + ga - 1.0),
                             std::fabs(be + ga - 1.0)});
        case gst::Family::FNN:
            return std::max({std::fabs(al * b + be - 1.0), std::fabs(al + ga * b - b),
                             std::fabs(be * a + ga * a - a)});
        case gst::Family::FFN:
            return std::max({std::fabs(al * b + be * a - 1.0), std::fabs(al + ga * b - b),
                             std::fabs(be + ga * a - a)});
        case gst::Family::FFF:
            return std::max({std::fabs(al * b + be * a - 1.0), std::fabs(al + ga * a - b),
                             std::fabs(be + ga * b - a)});
        }
        return 1.0;
    }();
    if (side_residual > gst::tol::construction) {
        throw gst::ConsistencyFailure("side equations violated, residual " + fmt(side_residual));
    }
    std::cout << "ok side equations\n";

    const gst::OscReport osc = gst::osc_witness(ifs);
    if (!osc.pass) {
        throw gst::ConsistencyFailure("open set condition witness failed: " + osc.detail);
    }
    std::cout << "ok open set condition witness\n";

    // Cover nesting at a small depth.
    const gst::TriangleCover parent = gst::deterministic_cover(ifs, 3);
    const gst::TriangleCover child = gst::deterministic_cover(ifs, 4);
    for (std::size_t i = 0; i < child.triangles.size(); ++i) {
        const gst::Triangle& big = parent.triangles[i / 3];
        for (const gst::Point2& p : child.triangles[i]) {
            if (!gst::point_in_triangle(p, big, 1e-10)) {
                throw gst::ConsistencyFailure("cover nesting violated at depth 4");
            }
        }
    }
    std::cout << "ok cover nesting\n";

    const gst::DimensionSample sample = gst::dimension_of(family, params);
    if (sample.residual > gst::tol::solver) {
        throw gst::ConsistencyFailure("dimension residual " + fmt(sample.residual));
    }
    std::cout << "ok dimension d=" << fmt(sample.d) << "\n";
    std::cout << "all checks passed\n";
    return kExitOk;
}

} // namespace
