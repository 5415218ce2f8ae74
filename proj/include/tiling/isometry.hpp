#pragma once
#include <array>

#include "tiling/orientation.hpp"
#include "tiling/quat.hpp"

namespace tiling {

struct Vec2 {
    double x = 0, y = 0;
};
struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }

// Rigid motion of the plane: exact orientation, double translation.
// Convention (used everywhere): isometries act on the left, and in
// compose(f, g) the map g is applied first.
struct Isometry2 {
    OrientationKey2 rot;
    Vec2 t;

    using Point = Vec2;
    using OrientKey = OrientationKey2;

    static Isometry2 identity() { return {}; }

    Vec2 apply(Vec2 p) const {
        auto m = rot.toMatrix();
        return {m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y};
    }
    Vec2 applyLinear(Vec2 p) const {
        auto m = rot.toMatrix();
        return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y};
    }
    Vec2 applyInverse(Vec2 p) const {
        // orthogonal matrix: inverse = transpose
        auto m = rot.toMatrix();
        double dx = p.x - t.x, dy = p.y - t.y;
        return {m[0] * dx + m[2] * dy, m[1] * dx + m[3] * dy};
    }
    OrientationKey2 orientation() const { return rot; }
};

inline Isometry2 compose(const Isometry2 &f, const Isometry2 &g) {
    return {composeKey2(f.rot, g.rot), f.apply(g.t)};
}

// Rigid motion of 3-space: exact rotation quaternion, double translation.
struct Isometry3 {
    RotationQuat rot;
    Vec3 t;

    using Point = Vec3;
    using OrientKey = RotationQuat;

    static Isometry3 identity() { return {}; }

    Vec3 apply(Vec3 p) const {
        auto m = rot.toMatrix();
        return {m[0] * p.x + m[1] * p.y + m[2] * p.z + t.x,
                m[3] * p.x + m[4] * p.y + m[5] * p.z + t.y,
                m[6] * p.x + m[7] * p.y + m[8] * p.z + t.z};
    }
    Vec3 applyLinear(Vec3 p) const {
        auto m = rot.toMatrix();
        return {m[0] * p.x + m[1] * p.y + m[2] * p.z,
                m[3] * p.x + m[4] * p.y + m[5] * p.z,
                m[6] * p.x + m[7] * p.y + m[8] * p.z};
    }
    Vec3 applyInverse(Vec3 p) const {
        auto m = rot.toMatrix();
        double dx = p.x - t.x, dy = p.y - t.y, dz = p.z - t.z;
        return {m[0] * dx + m[3] * dy + m[6] * dz,
                m[1] * dx + m[4] * dy + m[7] * dz,
                m[2] * dx + m[5] * dy + m[8] * dz};
    }
    RotationQuat orientation() const { return rot; }
};

inline Isometry3 compose(const Isometry3 &f, const Isometry3 &g) {
    return {quatMul(f.rot, g.rot), f.apply(g.t)};
}

}  // namespace tiling
