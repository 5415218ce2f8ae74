#pragma once
#include <set>

#include "tiling/quat.hpp"
#include "tiling/substitution.hpp"

namespace tiling {

//--ORIENTATION-SPECTRUM-------------------------------------------------------

struct SpectrumRow {
    int level = 0;
    double diameter = 0;              // lambda^level * root prototile diameter
    unsigned long long tileCount = 0; // all prototile types combined
    long orientationCount = 0;        // distinct orientations over the full supertile
};

// Walks (prototile, orientation) states level by level instead of expanding
// tiles, so deep supertiles stay cheap; tile counts come from the
// substitution matrix.  Rows cover levels 1..maxLevel.
template <class Iso>
std::vector<SpectrumRow> orientationSpectrum(const SubstitutionSystem<Iso> &sys,
                                             int maxLevel) {
    using Orient = decltype(Iso::rot);
    std::set<std::pair<int, Orient>> states{{0, Iso::identity().rot}};
    std::vector<SpectrumRow> rows;
    std::vector<unsigned long long> counts(sys.prototiles.size(), 0);
    counts[0] = 1;
    auto M = substitutionMatrix(sys);
    for (int level = 1; level <= maxLevel; ++level) {
        std::set<std::pair<int, Orient>> next;
        for (const auto &[proto, orient] : states)
            for (const auto &ch : sys.rules[proto].children)
                next.insert({ch.proto, composeOrient(Iso{orient, {}}, ch.iso)});
        states = std::move(next);

        std::vector<unsigned long long> nc(counts.size(), 0);
        for (size_t i = 0; i < counts.size(); ++i)
            for (size_t j = 0; j < counts.size(); ++j)
                nc[i] += (unsigned long long)M[i][j] * counts[j];
        counts = std::move(nc);

        std::set<Orient> distinct;
        for (const auto &[proto, orient] : states) distinct.insert(orient);
        unsigned long long total = 0;
        for (auto c : counts) total += c;
        rows.push_back({level, std::pow(sys.lambda, level) * sys.prototiles[0].diameter,
                        total, (long)distinct.size()});
    }
    return rows;
}

std::vector<SpectrumRow> orientationSpectrum(const AnySystem &sys, int maxLevel);

//--ROTATION-GROUP-BALLS-------------------------------------------------------

struct GroupBallRow {
    int wordLength = 0;
    long long distinctElements = 0;
    bool closed = false;  // ball equals the previous one: the group is finite
};

// Word-length balls of the group generated by a 2*pi/p turn about the first
// axis and a 2*pi/q turn about the third, p, q in {2, 3, 4, 6}.  Exact
// quaternion arithmetic, so equal rotations always collide.
std::vector<GroupBallRow> groupBall(int p, int q, int maxWordLength);

//--GROWTH-FITS----------------------------------------------------------------

enum class GrowthKind { Logarithmic, Power, Degenerate };

struct GrowthReport {
    GrowthKind kind = GrowthKind::Degenerate;
    // count ~ a + b * log(diameter)   (logarithmic)
    // count ~ exp(a) * diameter^b     (power)
    double a = 0, b = 0;
    double logResidual = 0;    // sum of squared errors in log-count space
    double powerResidual = 0;
};

// Least-squares fit of orientation count against log(diameter), both as a
// straight line and as a line in log-log space; the smaller residual (in
// log-count space) wins.  Needs at least three rows; constant counts are
// reported as degenerate.
GrowthReport growthReport(const std::vector<SpectrumRow> &rows);

}  // namespace tiling
