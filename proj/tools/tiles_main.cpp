// tiles: command-line front end for the substitution-tiling library.
//
//   tiles generate    expand a supertile and write JSON / SVG / OBJ
//   tiles stats       orientation-spectrum CSV per level
//   tiles group       word-length balls of two-generator rotation groups, CSV
//   tiles hyperbolic  upper half-plane binary tilings and disk packings
//   tiles verify      Monte-Carlo check that each rule partitions its parent
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// TILING_OUT_DIR, when set, is the directory for relative output paths.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "tiling/catalog.hpp"
#include "tiling/io.hpp"

using namespace tiling;

namespace {

std::string resolveOut(const std::string &path) {
    if (path.empty() || path.front() == '/') return path;
    const char *dir = std::getenv("TILING_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + path;
}

// write to the resolved path, or stdout when no path was given
int withOutput(const std::string &path, const std::function<void(std::ostream &)> &fn) {
    if (path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::string full = resolveOut(path);
    std::error_code ec;
    auto parent = std::filesystem::path(full).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    std::ofstream os(full, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << full << "\n";
        return 2;
    }
    fn(os);
    return 0;
}

int runGenerate(const std::string &system, int level, const std::string &format,
                const std::string &out, int workers, const std::vector<double> &windowVals) {
    AnySystem any = systemByName(system);
    const Box *windowPtr = nullptr;
    Box window;
    if (!windowVals.empty()) {
        if (windowVals.size() != 4 && windowVals.size() != 6) {
            std::cerr << "--window takes x0 y0 x1 y1 [z0 z1]\n";
            return 2;
        }
        window.lo = {windowVals[0], windowVals[1], windowVals.size() == 6 ? windowVals[4] : 0};
        window.hi = {windowVals[2], windowVals[3], windowVals.size() == 6 ? windowVals[5] : 0};
        windowPtr = &window;
    }
    return std::visit(
        [&](const auto &sys) -> int {
            auto tiles = expand(sys, level, windowPtr, workers);
            if (format == "json")
                return withOutput(out, [&](std::ostream &os) {
                    os << tilesJson(sys, level, tiles).dump(2) << "\n";
                });
            if constexpr (std::is_same_v<std::decay_t<decltype(sys)>, System2>) {
                if (format == "svg")
                    return withOutput(out, [&](std::ostream &os) { writeSvg(os, sys, tiles); });
            } else {
                if (format == "obj")
                    return withOutput(out, [&](std::ostream &os) { writeObj(os, sys, tiles); });
            }
            std::cerr << "format '" << format << "' not available for " << sys.name << "\n";
            return 2;
        },
        any);
}

int runVerify(const std::string &system, long long samples, double tolerance, int workers) {
    AnySystem any = systemByName(system);
    return std::visit(
        [&](const auto &sys) -> int {
            bool ok = true;
            for (size_t p = 0; p < sys.prototiles.size(); ++p) {
                auto rep = verifyPartition(sys, (int)p, samples, tolerance, 20260823ULL, workers);
                std::cout << sys.name << " / " << sys.prototiles[p].label
                          << ": residual=" << fmt12(rep.measureResidual)
                          << " violations=" << rep.multiplicityViolations
                          << " samples=" << rep.samplesUsed
                          << " boundary_rejected=" << rep.boundaryRejected
                          << (rep.degenerateGeometry ? " DEGENERATE" : "") << "\n";
                if (rep.degenerateGeometry || rep.multiplicityViolations != 0 ||
                    std::fabs(rep.measureResidual) > tolerance)
                    ok = false;
            }
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        },
        any);
}

int runHyperbolic(const std::string &choicesStr, const std::vector<double> &windowVals,
                  const std::string &mode, const std::string &format, const std::string &out,
                  bool bumps, double diskRadius) {
    std::vector<ParentChoice> choices;
    for (char c : choicesStr) {
        if (c == 'L' || c == 'l') choices.push_back(ParentChoice::LeftChild);
        else if (c == 'R' || c == 'r') choices.push_back(ParentChoice::RightChild);
        else {
            std::cerr << "--choices must be a string of L and R\n";
            return 2;
        }
    }
    HyperWindow w{0, 0.5, 2, 2};
    if (!windowVals.empty()) {
        if (windowVals.size() != 4) {
            std::cerr << "--window takes x0 y0 x1 y1\n";
            return 2;
        }
        w = {windowVals[0], windowVals[1], windowVals[2], windowVals[3]};
    }
    std::vector<BinaryTile> tiles;
    try {
        tiles = buildRegion(choices, w);
    } catch (const InsufficientChoices &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::vector<DiskCenter> centers;
    if (mode == "original")
        centers = diskCenters(tiles, PackingMode::Original);
    else if (mode == "shifted")
        centers = diskCenters(tiles, PackingMode::Shifted);
    else if (mode != "none") {
        std::cerr << "--disks must be original, shifted or none\n";
        return 2;
    }
    if (format == "json")
        return withOutput(out, [&](std::ostream &os) {
            os << hyperbolicJson(tiles, centers).dump(2) << "\n";
        });
    if (format == "svg") {
        HyperRenderOptions opt;
        opt.bumps = bumps;
        opt.diskRadius = diskRadius;
        return withOutput(out,
                          [&](std::ostream &os) { writeHyperbolicSvg(os, tiles, centers, opt); });
    }
    std::cerr << "hyperbolic formats: json, svg\n";
    return 2;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"substitution tilings: generation, statistics and verification"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "expand a supertile to unit tiles");
    std::string gSystem, gFormat = "json", gOut;
    int gLevel = 1, gWorkers = 0;
    std::vector<double> gWindow;
    gen->add_option("--system", gSystem, "thue-morse | pinwheel | kite-dart | quaquaversal")
        ->required();
    gen->add_option("--level", gLevel, "substitution depth")->required();
    gen->add_option("--format", gFormat, "json | svg (2D) | obj (3D)");
    gen->add_option("--out", gOut, "output file (default stdout)");
    gen->add_option("--workers", gWorkers, "thread count (0 = all available)");
    gen->add_option("--window", gWindow, "clip region x0 y0 x1 y1 [z0 z1]")->expected(4, 6);

    // stats
    auto *stats = app.add_subcommand("stats", "per-level size and orientation counts");
    std::string sSystem, sOut;
    int sMaxLevel = 6;
    stats->add_option("--system", sSystem)->required();
    stats->add_option("--max-level", sMaxLevel);
    stats->add_option("--out", sOut, "output CSV (default stdout)");

    // group
    auto *grp = app.add_subcommand("group", "rotation group word-length balls");
    int gp = 4, gq = 4, gMaxLen = 10;
    std::string grpOut;
    grp->add_option("--p", gp, "order of the first-axis generator (2,3,4,6)")->required();
    grp->add_option("--q", gq, "order of the third-axis generator (2,3,4,6)")->required();
    grp->add_option("--max-length", gMaxLen);
    grp->add_option("--out", grpOut);

    // hyperbolic
    auto *hyp = app.add_subcommand("hyperbolic", "binary tilings of the upper half-plane");
    std::string hChoices, hMode = "none", hFormat = "svg", hOut;
    std::vector<double> hWindow;
    bool hBumps = false;
    double hRadius = 0.2;
    hyp->add_option("--choices", hChoices, "ancestor chain, e.g. LRL (L/R per level)");
    hyp->add_option("--window", hWindow, "x0 y0 x1 y1 with y0 > 0")->expected(4);
    hyp->add_option("--disks", hMode, "disk packing centers: original | shifted | none");
    hyp->add_option("--format", hFormat, "svg | json");
    hyp->add_option("--out", hOut);
    hyp->add_flag("--bumps", hBumps, "decorative split-point bumps (rendering only)");
    hyp->add_option("--disk-radius", hRadius, "hyperbolic disk radius (rendering only)");

    // verify
    auto *ver = app.add_subcommand("verify", "check each rule tiles its scaled parent");
    std::string vSystem;
    long long vSamples = 100000;
    double vTol = 1e-9;
    int vWorkers = 0;
    ver->add_option("--system", vSystem)->required();
    ver->add_option("--samples", vSamples);
    ver->add_option("--tolerance", vTol);
    ver->add_option("--workers", vWorkers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are exit code 2
    }

    try {
        if (gen->parsed()) return runGenerate(gSystem, gLevel, gFormat, gOut, gWorkers, gWindow);
        if (stats->parsed()) {
            auto rows = orientationSpectrum(systemByName(sSystem), sMaxLevel);
            return withOutput(sOut, [&](std::ostream &os) { writeStatsCsv(os, rows); });
        }
        if (grp->parsed()) {
            auto rows = groupBall(gp, gq, gMaxLen);
            return withOutput(grpOut, [&](std::ostream &os) { writeGroupCsv(os, rows); });
        }
        if (hyp->parsed())
            return runHyperbolic(hChoices, hWindow, hMode, hFormat, hOut, hBumps, hRadius);
        if (ver->parsed()) return runVerify(vSystem, vSamples, vTol, vWorkers);
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
