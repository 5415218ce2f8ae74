#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "tiling/catalog.hpp"

using namespace tiling;

TEST_CASE("block substitution: two unit squares, factor 2") {
    auto sys = makeThueMorse();
    CHECK(sys.prototiles.size() == 2);
    CHECK(sys.lambda == 2.0);
    CHECK(sys.orientationKind == OrientationKind::LetterOnly);
    CHECK(sys.prototiles[0].label == "a");
    CHECK(sys.prototiles[1].label == "b");
    CHECK(sys.prototiles[0].measure == 1.0);
    for (const auto &rule : sys.rules) {
        CHECK(rule.children.size() == 4);
        for (const auto &ch : rule.children)
            CHECK(ch.iso.rot == OrientationKey2::identity());
    }
}

TEST_CASE("first row of the letter oracle") {
    std::string row;
    for (unsigned long long i = 0; i < 16; ++i) row += morseLabelAt(i, 0);
    CHECK(row == "abbabaabbaababba");
    // the oracle is symmetric and flips on either coordinate's lowest set bit
    CHECK(morseLabelAt(3, 5) == morseLabelAt(5, 3));
}

TEST_CASE("expanded letters match the popcount oracle") {
    auto sys = makeThueMorse();
    auto tiles = expandSerial(sys, 5);
    REQUIRE(tiles.size() == 1024);
    for (const auto &t : tiles) {
        auto i = (unsigned long long)std::llround(t.placement.t.x);
        auto j = (unsigned long long)std::llround(t.placement.t.y);
        CHECK(sys.prototiles[t.proto].label[0] == morseLabelAt(i, j));
    }
}

TEST_CASE("pinwheel: right triangle with legs 1 and 2, five children") {
    auto sys = makePinwheel();
    CHECK(sys.prototiles.size() == 1);
    CHECK(sys.lambda == std::sqrt(5.0));
    CHECK(sys.rules[0].children.size() == 5);
    CHECK(sys.prototiles[0].measure == doctest::Approx(1.0).epsilon(1e-12));
    bool anyAlpha = false;
    for (const auto &ch : sys.rules[0].children)
        if (ch.iso.rot.alphaCount != 0) anyAlpha = true;
    CHECK(anyAlpha);
}

TEST_CASE("pinwheel orientations stay inside the level envelope") {
    auto sys = makePinwheel();
    for (int level = 1; level <= 4; ++level)
        for (const auto &t : expandSerial(sys, level))
            CHECK(std::labs(t.placement.rot.alphaCount) <= level);
}

TEST_CASE("kite & dart: golden inflation on half-tiles") {
    auto sys = makeKiteDart();
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(sys.lambda == phi);
    CHECK(substitutionMatrix(sys) == std::vector<std::vector<long>>{{2, 1}, {1, 1}});
    for (const auto &rule : sys.rules)
        for (const auto &ch : rule.children) CHECK(ch.iso.rot.turnModulus == 10);
    CHECK(expandSerial(sys, 1).size() == 3);  // half-kite root

    auto counts = countsAtLevel(sys, 12);
    double ratio = (double)counts[0] / (double)counts[1];
    CHECK(ratio == doctest::Approx(phi).epsilon(0.01));
}

TEST_CASE("quaquaversal: one prism, factor 2, eight children") {
    auto sys = makeQuaquaversal();
    CHECK(sys.dimension == 3);
    CHECK(sys.lambda == 2.0);
    CHECK(sys.rules[0].children.size() == 8);
    CHECK(sys.prototiles[0].shape.height == std::sqrt(3.0));
    for (const auto &ch : sys.rules[0].children)
        CHECK(ch.iso.rot.normSq() == QuadFieldElement::one());
}

TEST_CASE("catalog lookup") {
    for (const auto &name : systemNames()) CHECK_NOTHROW(systemByName(name));
    CHECK_THROWS_AS(systemByName("penrose-p1"), std::invalid_argument);
}
