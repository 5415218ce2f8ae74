#pragma once
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tiling/rational.hpp"

namespace tiling {

// Element of Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// The four coefficients determine the element uniquely, so equality is
// component-wise equality of reduced rationals.
struct QuadFieldElement {
    BigRational a, b, c, d;

    QuadFieldElement() = default;
    QuadFieldElement(BigRational a_, BigRational b_, BigRational c_, BigRational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static QuadFieldElement ofRational(const BigRational &r) { return {r, 0, 0, 0}; }
    static QuadFieldElement ofInt(long v) { return {BigRational(v), 0, 0, 0}; }
    static QuadFieldElement zero() { return ofInt(0); }
    static QuadFieldElement one() { return ofInt(1); }
    static QuadFieldElement sqrt2() { return {0, 1, 0, 0}; }
    static QuadFieldElement sqrt3() { return {0, 0, 1, 0}; }
    static QuadFieldElement sqrt6() { return {0, 0, 0, 1}; }

    bool isZero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend bool operator==(const QuadFieldElement &x, const QuadFieldElement &y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    friend QuadFieldElement operator+(const QuadFieldElement &x, const QuadFieldElement &y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend QuadFieldElement operator-(const QuadFieldElement &x, const QuadFieldElement &y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    QuadFieldElement operator-() const { return {-a, -b, -c, -d}; }

    // basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
    // sqrt3*sqrt6 = 3*sqrt2, sqrt6*sqrt6 = 6
    friend QuadFieldElement operator*(const QuadFieldElement &x, const QuadFieldElement &y) {
        return {
            x.a * y.a + 2 * x.b * y.b + 3 * x.c * y.c + 6 * x.d * y.d,
            x.a * y.b + x.b * y.a + 3 * (x.c * y.d + x.d * y.c),
            x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
            x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b,
        };
    }

    QuadFieldElement scaled(const BigRational &r) const { return {a * r, b * r, c * r, d * r}; }

    // field conjugations: sqrt2 -> -sqrt2 (flips b, d), sqrt3 -> -sqrt3 (flips c, d)
    QuadFieldElement conjSqrt2() const { return {a, -b, c, -d}; }
    QuadFieldElement conjSqrt3() const { return {a, b, -c, -d}; }

    double toDouble() const {
        static const double S2 = std::sqrt(2.0), S3 = std::sqrt(3.0), S6 = std::sqrt(6.0);
        return ratToDouble(a) + ratToDouble(b) * S2 + ratToDouble(c) * S3 + ratToDouble(d) * S6;
    }

    void appendCoeffs(std::vector<BigRational> &out) const {
        out.push_back(a);
        out.push_back(b);
        out.push_back(c);
        out.push_back(d);
    }
};

// Exact inverse by rationalizing through the two conjugations:
// x * conj2(x) lies in Q(sqrt3); multiplying that by its sqrt3-conjugate
// gives a plain rational (the field norm), which cannot vanish for x != 0.
inline QuadFieldElement qfInverse(const QuadFieldElement &x) {
    if (x.isZero()) throw std::domain_error("qfInverse: division by zero");
    QuadFieldElement y = x * x.conjSqrt2();          // b = d = 0 here
    QuadFieldElement n = y * y.conjSqrt3();          // rational
    QuadFieldElement num = x.conjSqrt2() * y.conjSqrt3();
    return num.scaled(BigRational(1) / n.a);
}

}  // namespace tiling
