#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "tiling/analysis.hpp"
#include "tiling/catalog.hpp"

using namespace tiling;

TEST_CASE("pinwheel orientation counts grow without bound") {
    auto rows = orientationSpectrum(makePinwheel(), 8);
    REQUIRE(rows.size() == 8);
    // frozen reference values, cross-checked against full expansions below
    std::vector<long> expected{4, 13, 22, 30, 38, 46, 54, 62};
    for (int i = 0; i < 8; ++i) {
        CHECK(rows[i].orientationCount == expected[i]);
        int n = rows[i].level;
        CHECK(rows[i].orientationCount > n);
        CHECK(rows[i].orientationCount <= 8 * (2 * n + 1));
        if (i > 0) CHECK(rows[i].orientationCount >= rows[i - 1].orientationCount);
        CHECK(rows[i].tileCount == (unsigned long long)std::llround(std::pow(5.0, n)));
        CHECK(rows[i].diameter ==
              doctest::Approx(std::pow(std::sqrt(5.0), n) * std::sqrt(5.0)).epsilon(1e-9));
    }
}

TEST_CASE("spectrum agrees with brute-force expansion") {
    auto sys = makePinwheel();
    auto rows = orientationSpectrum(sys, 4);
    for (const auto &row : rows) {
        auto tiles = expandSerial(sys, row.level);
        std::set<OrientationKey2> keys;
        for (const auto &t : tiles) keys.insert(t.placement.rot);
        CHECK(row.orientationCount == (long)keys.size());
        CHECK(row.tileCount == tiles.size());
    }
}

TEST_CASE("kite & dart orientations saturate at twenty") {
    auto rows = orientationSpectrum(makeKiteDart(), 12);
    for (const auto &row : rows) CHECK(row.orientationCount <= 20);
    CHECK(rows.back().orientationCount == 20);  // all pi/5 rotations, both hands
}

TEST_CASE("letter-only systems never rotate") {
    auto rows = orientationSpectrum(makeThueMorse(), 6);
    for (const auto &row : rows) CHECK(row.orientationCount == 1);
}

TEST_CASE("quaquaversal orientation counts, exact") {
    auto rows = orientationSpectrum(makeQuaquaversal(), 5);
    std::vector<long> expected{6, 22, 40, 68, 104};
    REQUIRE(rows.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(rows[i].orientationCount == expected[i]);
    for (int i = 1; i < 5; ++i) {
        CHECK(rows[i].orientationCount > rows[i - 1].orientationCount);
        double ratio = (double)rows[i].orientationCount / rows[i - 1].orientationCount;
        CHECK(ratio > 1.5);
    }
}

TEST_CASE("two-generator rotation group balls") {
    auto g44 = groupBall(4, 4, 10);
    CHECK(g44.back().closed);
    CHECK(g44.back().distinctElements == 24);

    auto g22 = groupBall(2, 2, 3);
    REQUIRE(g22.size() == 3);
    CHECK(g22[0].distinctElements == 3);
    CHECK(!g22[0].closed);
    CHECK(g22[1].distinctElements == 4);
    CHECK(!g22[1].closed);
    CHECK(g22[2].distinctElements == 4);
    CHECK(g22[2].closed);

    for (auto [p, q] : {std::pair{3, 3}, std::pair{3, 4}}) {
        auto rows = groupBall(p, q, 10);
        CHECK(!rows.back().closed);  // these are infinite: never close
        for (size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].distinctElements > rows[i - 1].distinctElements);
    }
}

TEST_CASE("ball sizes are monotone and closure is permanent") {
    auto rows = groupBall(4, 4, 12);
    bool closed = false;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) CHECK(rows[i].distinctElements >= rows[i - 1].distinctElements);
        if (closed) {
            CHECK(rows[i].closed);
            CHECK(rows[i].distinctElements == rows[i - 1].distinctElements);
        }
        closed = closed || rows[i].closed;
    }
}

TEST_CASE("distinct group elements are far apart as matrices") {
    std::vector<RotationQuat> gens = {axisRotation(4, 0), axisRotation(4, 0).inverse(),
                                      axisRotation(4, 2), axisRotation(4, 2).inverse()};
    std::set<RotationQuat> ball{RotationQuat::identity()};
    std::vector<RotationQuat> frontier{RotationQuat::identity()};
    while (!frontier.empty()) {
        std::vector<RotationQuat> next;
        for (const auto &e : frontier)
            for (const auto &g : gens) {
                RotationQuat c = quatMul(e, g);
                if (ball.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    REQUIRE(ball.size() == 24);
    std::vector<RotationQuat> elems(ball.begin(), ball.end());
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j) {
            auto a = elems[i].toMatrix(), b = elems[j].toMatrix();
            double diff = 0;
            for (int k = 0; k < 9; ++k) diff = std::max(diff, std::fabs(a[k] - b[k]));
            CHECK(diff > 1e-6);
        }
}

TEST_CASE("growth fits pick the right family") {
    auto pin = growthReport(orientationSpectrum(makePinwheel(), 8));
    CHECK(pin.kind == GrowthKind::Logarithmic);
    CHECK(pin.b > 0);

    auto qq = growthReport(orientationSpectrum(makeQuaquaversal(), 5));
    CHECK(qq.kind == GrowthKind::Power);
    CHECK(qq.b > 0);

    auto flat = growthReport(orientationSpectrum(makeThueMorse(), 5));
    CHECK(flat.kind == GrowthKind::Degenerate);

    CHECK_THROWS_AS(growthReport(orientationSpectrum(makePinwheel(), 2)),
                    std::invalid_argument);
}
