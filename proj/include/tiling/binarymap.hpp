#pragma once
#include <cmath>

#include "tiling/dyadic.hpp"

namespace tiling {

// Self-map of the upper half-plane z -> 2^k * z + t with dyadic real t.
// These are exactly the maps that carry binary tiles onto binary tiles.
struct BinaryMap {
    long levelShift = 0;  // k
    Dyadic offset;        // t

    static BinaryMap identity() { return {}; }

    // (k1,t1) o (k2,t2) = (k1+k2, 2^k1 * t2 + t1), exact
    friend BinaryMap binCompose(const BinaryMap &f, const BinaryMap &g) {
        return {f.levelShift + g.levelShift, g.offset.shifted(f.levelShift) + f.offset};
    }

    // double-precision action on a point of the half-plane
    double applyX(double x) const { return std::ldexp(x, (int)levelShift) + offset.toDouble(); }
    double applyY(double y) const { return std::ldexp(y, (int)levelShift); }

    friend bool operator==(const BinaryMap &a, const BinaryMap &b) {
        return a.levelShift == b.levelShift && a.offset == b.offset;
    }
};

}  // namespace tiling
