#pragma once
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace tiling {

// Exact O(2) identity for substitution orientations.  An element is written
// R(theta) * F^r with theta = alphaCount * alpha + turns * (2*pi/turnModulus),
// alpha = arctan(1/2) and F the reflection across the horizontal axis.
// Because alpha is an irrational multiple of pi, the triple (alphaCount,
// turns, reflected) identifies the element uniquely.
//
// turnModulus 4 gives quarter turns (pinwheel family); the kite & dart
// bookkeeping uses turnModulus 10 (pi/5 steps) with alphaCount fixed at 0.
struct OrientationKey2 {
    long alphaCount = 0;
    int turns = 0;
    bool reflected = false;
    int turnModulus = 4;

    OrientationKey2() = default;
    OrientationKey2(long n, int k, bool r, int mod = 4)
        : alphaCount(n), turns(((k % mod) + mod) % mod), reflected(r), turnModulus(mod) {}

    static OrientationKey2 identity(int mod = 4) { return OrientationKey2(0, 0, false, mod); }

    double angle() const {
        static const double ALPHA = std::atan2(1.0, 2.0);
        return alphaCount * ALPHA + turns * (2.0 * M_PI / turnModulus);
    }

    // row-major 2x2 matrix of R(theta) * F^r
    std::array<double, 4> toMatrix() const {
        double c = std::cos(angle()), s = std::sin(angle());
        if (reflected) return {c, s, s, -c};
        return {c, -s, s, c};
    }

    friend bool operator==(const OrientationKey2 &f, const OrientationKey2 &g) {
        return f.alphaCount == g.alphaCount && f.turns == g.turns &&
               f.reflected == g.reflected && f.turnModulus == g.turnModulus;
    }
    friend bool operator<(const OrientationKey2 &f, const OrientationKey2 &g) {
        return std::tie(f.alphaCount, f.turns, f.reflected, f.turnModulus) <
               std::tie(g.alphaCount, g.turns, g.reflected, g.turnModulus);
    }
};

inline bool isIdentityKey2(const OrientationKey2 &k) {
    return k.alphaCount == 0 && k.turns == 0 && !k.reflected;
}

// group law: R(a)F^r . R(b)F^s = R(a + (-1)^r b) F^(r xor s)
inline OrientationKey2 composeKey2(const OrientationKey2 &f, const OrientationKey2 &g) {
    if (f.turnModulus != g.turnModulus) {
        // the identity is the same element under any turn granularity
        if (isIdentityKey2(f)) return g;
        if (isIdentityKey2(g)) return f;
        throw std::invalid_argument("composeKey2: mixed turn granularity");
    }
    long sign = f.reflected ? -1 : 1;
    return OrientationKey2(f.alphaCount + sign * g.alphaCount,
                           static_cast<int>(f.turns + sign * g.turns),
                           f.reflected != g.reflected, f.turnModulus);
}

inline OrientationKey2 inverseKey2(const OrientationKey2 &f) {
    // reflections are involutions; rotations invert by negating the angle
    if (f.reflected) return f;
    return OrientationKey2(-f.alphaCount, -f.turns, false, f.turnModulus);
}

}  // namespace tiling
