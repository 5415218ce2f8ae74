#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tiling/catalog.hpp"

using namespace tiling;

namespace {

template <class Iso>
std::set<std::vector<uint8_t>> addressSet(const std::vector<TileInstance<Iso>> &tiles) {
    std::set<std::vector<uint8_t>> s;
    for (const auto &t : tiles) s.insert(t.address);
    return s;
}

}  // namespace

TEST_CASE("expansion sizes follow the child counts") {
    CHECK(expandSerial(makePinwheel(), 0).size() == 1);
    CHECK(expandSerial(makePinwheel(), 3).size() == 125);
    CHECK(expandSerial(makeQuaquaversal(), 2).size() == 64);
    CHECK(expandSerial(makeThueMorse(), 3).size() == 64);
}

TEST_CASE("substitution matrices") {
    CHECK(substitutionMatrix(makePinwheel()) == std::vector<std::vector<long>>{{5}});
    CHECK(substitutionMatrix(makeKiteDart()) ==
          std::vector<std::vector<long>>{{2, 1}, {1, 1}});
    CHECK(substitutionMatrix(makeThueMorse()) ==
          std::vector<std::vector<long>>{{2, 2}, {2, 2}});
}

TEST_CASE("countsAtLevel matches real expansions") {
    auto kd = makeKiteDart();
    for (int level = 0; level <= 6; ++level) {
        auto counts = countsAtLevel(kd, level);
        auto tiles = expandSerial(kd, level);
        unsigned long long kites = 0, darts = 0;
        for (const auto &t : tiles) (t.proto == 0 ? kites : darts)++;
        CHECK(counts[0] == kites);
        CHECK(counts[1] == darts);
    }
}

TEST_CASE("dominant eigenvalue of the kite & dart matrix") {
    auto r = dominantEigen(substitutionMatrix(makeKiteDart()));
    CHECK(r.value == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-11));
    CHECK(r.vec.size() == 2);
    CHECK(r.vec[0] + r.vec[1] == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("power iteration reports non-convergence") {
    // eigenvalues +-sqrt2 tie in modulus, so the iteration oscillates forever
    CHECK_THROWS_AS(dominantEigen({{0, 2}, {1, 0}}), std::runtime_error);
}

TEST_CASE("every catalog rule partitions its scaled parent") {
    auto checkSystem = [](const auto &sys) {
        for (size_t p = 0; p < sys.prototiles.size(); ++p) {
            auto rep = verifyPartitionSerial(sys, (int)p, 20000, 1e-9);
            CAPTURE(sys.name);
            CAPTURE(p);
            CHECK(!rep.degenerateGeometry);
            CHECK(std::fabs(rep.measureResidual) <= 1e-9);
            CHECK(rep.multiplicityViolations == 0);
            CHECK(rep.samplesUsed > 15000);
        }
    };
    checkSystem(makeThueMorse());
    checkSystem(makePinwheel());
    checkSystem(makeKiteDart());
    checkSystem(makeQuaquaversal());
}

TEST_CASE("a corrupted rule is caught") {
    auto sys = makePinwheel();
    sys.rules[0].children[2].iso.t.x += 0.01;  // slide one child off its slot
    auto rep = verifyPartitionSerial(sys, 0, 20000, 1e-9);
    CHECK(rep.multiplicityViolations > 0);
}

TEST_CASE("degenerate geometry is reported distinctly") {
    auto sys = makePinwheel();
    Shape flat{{{0, 0}, {2, 0}, {4, 0}}, 0};  // zero-area triangle
    sys.prototiles[0] = makePrototile(0, "flat", flat, 2);
    auto rep = verifyPartitionSerial(sys, 0, 1000, 1e-9);
    CHECK(rep.degenerateGeometry);
    CHECK(rep.multiplicityViolations == 0);  // failure mode is distinct
}

TEST_CASE("parallel verification agrees with the serial reference") {
    auto sys = makeKiteDart();
    auto a = verifyPartitionSerial(sys, 0, 30000, 1e-9);
    for (int workers : {1, 3, 7}) {
        auto b = verifyPartition(sys, 0, 30000, 1e-9, 20260823ULL, workers);
        CHECK(a.multiplicityViolations == b.multiplicityViolations);
        CHECK(a.samplesUsed == b.samplesUsed);
        CHECK(a.boundaryRejected == b.boundaryRejected);
        CHECK(a.measureResidual == b.measureResidual);
    }
}

TEST_CASE("placements recomputed from addresses agree") {
    auto check2 = [](const System2 &sys, int level) {
        for (const auto &t : expandSerial(sys, level)) {
            Isometry2 p = placementFromAddress(sys, t.address);
            CHECK(p.rot == t.placement.rot);
            CHECK(p.t.x == doctest::Approx(t.placement.t.x).epsilon(1e-9));
            CHECK(p.t.y == doctest::Approx(t.placement.t.y).epsilon(1e-9));
        }
    };
    check2(makePinwheel(), 3);
    check2(makeKiteDart(), 5);
    for (const auto &t : expandSerial(makeQuaquaversal(), 2)) {
        Isometry3 p = placementFromAddress(makeQuaquaversal(), t.address);
        CHECK(p.rot == t.placement.rot);
        CHECK(p.t.x == doctest::Approx(t.placement.t.x).epsilon(1e-9));
    }
}

TEST_CASE("window pruning is sound and tight") {
    auto sys = makePinwheel();
    Box window;
    window.lo = {1.0, 1.0, 0};
    window.hi = {6.0, 4.0, 0};
    auto full = expandSerial(sys, 5);
    auto clipped = expandSerial(sys, 5, &window);
    auto clippedSet = addressSet(clipped);
    CHECK(clipped.size() < full.size());
    // every clipped tile is a real tile, and every intersecting tile is kept
    auto fullSet = addressSet(full);
    for (const auto &a : clippedSet) CHECK(fullSet.count(a) == 1);
    for (const auto &t : full) {
        bool touches =
            detail::tileTouchesBox(t.placement, sys.prototiles[t.proto], window);
        CHECK(clippedSet.count(t.address) == (touches ? 1u : 0u));
    }
}

TEST_CASE("expansion order is identical for any worker count") {
    auto sys = makePinwheel();
    auto serial = expandSerial(sys, 6);
    for (int workers : {1, 2, 5}) {
        auto par = expand(sys, 6, nullptr, workers);
        REQUIRE(par.size() == serial.size());
        for (size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].address == serial[i].address);
            CHECK(par[i].proto == serial[i].proto);
        }
    }
    Box window;
    window.lo = {0.0, 0.0, 0};
    window.hi = {5.0, 5.0, 0};
    auto ws = expandSerial(sys, 6, &window);
    auto wp = expand(sys, 6, &window, 3);
    CHECK(addressSet(ws) == addressSet(wp));
}

TEST_CASE("subdivide rejects a missing rule") {
    auto sys = makePinwheel();
    TileInstance<Isometry2> bad{3, Isometry2::identity(), {}};
    CHECK_THROWS_AS(subdivide(bad, sys), std::invalid_argument);
}
