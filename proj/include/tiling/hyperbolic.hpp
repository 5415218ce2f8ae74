#pragma once
#include <utility>
#include <vector>

#include "tiling/binarymap.hpp"
#include "tiling/dyadic.hpp"
#include "tiling/rational.hpp"

namespace tiling {

// A tile of the binary tiling of the upper half-plane:
//   x in origin + [2^(k+1) * m, 2^(k+1) * (m+1)],  y in [2^k, 2^(k+1)].
// The primary tile is (k=0, m=0, origin=0) with corners i, 2+i, 2i, 2+2i.
//
// `origin` is normally zero.  Choosing the right-hand parent of a tile
// shifts the ancestor strip half a parent-width off the dyadic grid; the
// dyadic origin records that shift exactly instead of forcing it into the
// integer index.  Tiles are equal iff their level and exact x-interval agree.
struct BinaryTile {
    long level = 0;   // k
    BigInt index = 0; // m
    Dyadic origin;

    BinaryTile() = default;
    BinaryTile(long k, BigInt m, Dyadic o = Dyadic()) : level(k), index(std::move(m)), origin(o) {
        normalize();
    }

    // fold the origin into the index when it is a multiple of the tile width
    void normalize() {
        if (origin.isZero()) return;
        if (origin.exponent >= level + 1) {
            index += origin.mantissa << (origin.exponent - (level + 1));
            origin = Dyadic();
        }
    }

    Dyadic width() const { return Dyadic(1, level + 1); }
    Dyadic xStart() const { return origin + Dyadic(index, level + 1); }
    Dyadic xEnd() const { return origin + Dyadic(index + 1, level + 1); }
    Dyadic yLow() const { return Dyadic(1, level); }
    Dyadic yHigh() const { return Dyadic(1, level + 1); }

    friend bool operator==(const BinaryTile &a, const BinaryTile &b) {
        return a.level == b.level && a.xStart() == b.xStart();
    }
    friend bool operator<(const BinaryTile &a, const BinaryTile &b) {
        if (a.level != b.level) return a.level < b.level;
        return a.xStart() < b.xStart();
    }
};

enum class ParentChoice { LeftChild, RightChild };

// the two tiles in the strip below t spanning exactly t's horizontal extent
std::pair<BinaryTile, BinaryTile> children(const BinaryTile &t);

// The strip above t is not unique: t can be the left or the right half of
// its parent.  children(parentOf(t, c)) always contains t.
BinaryTile parentOf(const BinaryTile &t, ParentChoice choice);

struct HyperWindow {
    double x0, y0, x1, y1;  // requires y0 > 0
};

struct InsufficientChoices : std::runtime_error {
    int neededDepth;
    explicit InsufficientChoices(int needed)
        : std::runtime_error("window extends above the reachable ancestor strip; need " +
                             std::to_string(needed) + " parent choices"),
          neededDepth(needed) {}
};

// Ascend from the primary tile through `choices`, then descend, returning
// exactly the tiles whose interior meets the window (top strip first, left
// to right within each strip).
std::vector<BinaryTile> buildRegion(const std::vector<ParentChoice> &choices,
                                    const HyperWindow &window);

// hyperbolic area (dx dy / y^2); equals 1 for every binary tile
double tileArea(const BinaryTile &t);

enum class PackingMode { Original, Shifted };

struct DiskCenter {
    BigRational x, y;  // exact
    BinaryTile sourceTile;
};

// Original mode: the image of 1/2 + 7i/4 under each tile's placement map,
// i.e. (xStart + 2^(k-1), 7*2^(k-2)).  Shifted mode additionally applies
// z -> 6z/5 to the centers (and only to the centers).
std::vector<DiskCenter> diskCenters(const std::vector<BinaryTile> &tiles, PackingMode mode);

struct CenterCountReport {
    std::vector<long long> perTile;  // aligned with the input tile list
    long long outside = 0;           // centers not in any given tile
};

// Assigns each center to the unique tile whose half-open region
// [xStart, xEnd) x [2^k, 2^(k+1)) contains it (exact rational comparisons).
CenterCountReport countCentersPerTile(const std::vector<BinaryTile> &tiles,
                                      const std::vector<DiskCenter> &centers);

BigRational pow2Rational(long e);

}  // namespace tiling
