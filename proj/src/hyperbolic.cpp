#include "tiling/hyperbolic.hpp"

#include <cmath>

namespace tiling {

std::pair<BinaryTile, BinaryTile> children(const BinaryTile &t) {
    // halving the x-interval keeps the origin; the constructor renormalizes
    return {BinaryTile(t.level - 1, 2 * t.index, t.origin),
            BinaryTile(t.level - 1, 2 * t.index + 1, t.origin)};
}

BinaryTile parentOf(const BinaryTile &t, ParentChoice choice) {
    Dyadic start = t.xStart();
    if (choice == ParentChoice::RightChild) start = start - Dyadic(1, t.level + 1);
    return BinaryTile(t.level + 1, 0, start);
}

double tileArea(const BinaryTile &t) {
    long k = t.level;
    double width = std::ldexp(1.0, static_cast<int>(k + 1));
    double heightIntegral =
        std::ldexp(1.0, static_cast<int>(-k)) - std::ldexp(1.0, static_cast<int>(-k - 1));
    return width * heightIntegral;
}

std::vector<BinaryTile> buildRegion(const std::vector<ParentChoice> &choices,
                                    const HyperWindow &window) {
    if (!(window.y0 > 0) || !(window.y1 > window.y0) || !(window.x1 > window.x0))
        throw std::invalid_argument("buildRegion: window must satisfy 0 < y0 < y1, x0 < x1");

    const long K = static_cast<long>(choices.size());
    if (std::ldexp(1.0, static_cast<int>(K + 1)) < window.y1) {
        int needed = 0;
        while (std::ldexp(1.0, needed + 1) < window.y1) ++needed;
        throw InsufficientChoices(needed);
    }

    // The choices pin the ancestor chain of the primary tile; each Right
    // choice shifts the ancestor's left edge.  Every strip at or below the
    // ancestor is cut on the grid anchored at that edge.
    Dyadic anchor;
    for (long j = 0; j < K; ++j)
        if (choices[static_cast<size_t>(j)] == ParentChoice::RightChild)
            anchor = anchor - Dyadic(1, j + 1);
    const double a = anchor.toDouble();

    std::vector<BinaryTile> out;
    for (long k = K;; --k) {
        double yLow = std::ldexp(1.0, static_cast<int>(k));
        double yHigh = std::ldexp(1.0, static_cast<int>(k + 1));
        if (yHigh <= window.y0) break;          // strip entirely below the window
        if (yLow >= window.y1) continue;        // strip entirely above the window
        double w = yHigh;                       // tile width at level k is 2^(k+1)
        long long i = static_cast<long long>(std::floor((window.x0 - a) / w));
        while (a + w * static_cast<double>(i + 1) <= window.x0) ++i;
        for (; a + w * static_cast<double>(i) < window.x1; ++i)
            out.emplace_back(k, BigInt(i), anchor);
    }
    return out;
}

BigRational pow2Rational(long e) {
    if (e >= 0) return BigRational(BigInt(1) << e);
    return BigRational(1, BigInt(1) << (-e));
}

std::vector<DiskCenter> diskCenters(const std::vector<BinaryTile> &tiles, PackingMode mode) {
    std::vector<DiskCenter> out;
    out.reserve(tiles.size());
    for (const auto &t : tiles) {
        // image of 1/2 + 7i/4 under x -> 2^k x + xStart, y -> 2^k y
        BigRational x = t.xStart().toRational() + pow2Rational(t.level - 1);
        BigRational y = BigRational(7) * pow2Rational(t.level - 2);
        if (mode == PackingMode::Shifted) {
            const BigRational scale(6, 5);
            x *= scale;
            y *= scale;
        }
        out.push_back({x, y, t});
    }
    return out;
}

CenterCountReport countCentersPerTile(const std::vector<BinaryTile> &tiles,
                                      const std::vector<DiskCenter> &centers) {
    CenterCountReport rep;
    rep.perTile.assign(tiles.size(), 0);
    for (const auto &c : centers) {
        bool placed = false;
        for (size_t i = 0; i < tiles.size(); ++i) {
            const auto &t = tiles[i];
            if (t.xStart().toRational() <= c.x && c.x < t.xEnd().toRational() &&
                t.yLow().toRational() <= c.y && c.y < t.yHigh().toRational()) {
                ++rep.perTile[i];
                placed = true;
                break;
            }
        }
        if (!placed) ++rep.outside;
    }
    return rep;
}

}  // namespace tiling
