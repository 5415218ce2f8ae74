#pragma once
#include <array>
#include <stdexcept>

#include "tiling/quadfield.hpp"

namespace tiling {

// Unit quaternion with coefficients in Q(sqrt2, sqrt3), stored in canonical
// sign: the 16-rational coefficient vector is lexicographically positive.
// Since q and -q are the same rotation, canonical forms compare rotations
// exactly with no floating point involved.
struct RotationQuat {
    QuadFieldElement w, x, y, z;

    RotationQuat() : w(QuadFieldElement::one()) {}
    RotationQuat(QuadFieldElement w_, QuadFieldElement x_, QuadFieldElement y_,
                 QuadFieldElement z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        canonicalize();
    }

    static RotationQuat identity() { return RotationQuat(); }

    std::vector<BigRational> coeffs() const {
        std::vector<BigRational> v;
        v.reserve(16);
        w.appendCoeffs(v);
        x.appendCoeffs(v);
        y.appendCoeffs(v);
        z.appendCoeffs(v);
        return v;
    }

    void canonicalize() {
        static const std::vector<BigRational> zeros(16, BigRational(0));
        if (lexCompare(coeffs(), zeros) == Ord::LT) {
            w = -w;
            x = -x;
            y = -y;
            z = -z;
        }
    }

    QuadFieldElement normSq() const { return w * w + x * x + y * y + z * z; }

    RotationQuat inverse() const { return RotationQuat(w, -x, -y, -z); }

    friend bool operator==(const RotationQuat &p, const RotationQuat &q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
    friend bool operator<(const RotationQuat &p, const RotationQuat &q) {
        return lexCompare(p.coeffs(), q.coeffs()) == Ord::LT;
    }

    // double-precision rotation matrix, row major
    std::array<double, 9> toMatrix() const {
        double qw = w.toDouble(), qx = x.toDouble(), qy = y.toDouble(), qz = z.toDouble();
        return {1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qz * qw), 2 * (qx * qz + qy * qw),
                2 * (qx * qy + qz * qw), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qx * qw),
                2 * (qx * qz - qy * qw), 2 * (qy * qz + qx * qw), 1 - 2 * (qx * qx + qy * qy)};
    }
};

// exact Hamilton product, re-canonicalized
inline RotationQuat quatMul(const RotationQuat &p, const RotationQuat &q) {
    return RotationQuat(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
}

// Rotation by 2*pi/p about a coordinate axis (0 = x, 2 = z).
// cos(pi/p) and sin(pi/p) lie in Q(sqrt2,sqrt3) exactly for p in {2,3,4,6}.
inline RotationQuat axisRotation(int p, int axis) {
    QuadFieldElement c, s;
    const BigRational half(1, 2);
    switch (p) {
        case 2: c = QuadFieldElement::zero(); s = QuadFieldElement::one(); break;
        case 3: c = QuadFieldElement::ofRational(half); s = QuadFieldElement::sqrt3().scaled(half); break;
        case 4: c = QuadFieldElement::sqrt2().scaled(half); s = QuadFieldElement::sqrt2().scaled(half); break;
        case 6: c = QuadFieldElement::sqrt3().scaled(half); s = QuadFieldElement::ofRational(half); break;
        default:
            throw std::invalid_argument("axisRotation: cos/sin of pi/p outside Q(sqrt2,sqrt3)");
    }
    QuadFieldElement zero = QuadFieldElement::zero();
    switch (axis) {
        case 0: return RotationQuat(c, s, zero, zero);
        case 1: return RotationQuat(c, zero, s, zero);
        case 2: return RotationQuat(c, zero, zero, s);
        default: throw std::invalid_argument("axisRotation: bad axis");
    }
}

}  // namespace tiling
