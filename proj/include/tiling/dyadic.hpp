#pragma once
#include <cmath>
#include <cstdint>

#include "tiling/rational.hpp"

namespace tiling {

// value = mantissa * 2^exponent, normalized so the mantissa is odd or zero.
struct Dyadic {
    BigInt mantissa = 0;
    long exponent = 0;

    Dyadic() = default;
    Dyadic(BigInt m, long e) : mantissa(std::move(m)), exponent(e) { normalize(); }
    explicit Dyadic(long v) : mantissa(v), exponent(0) { normalize(); }

    void normalize() {
        if (mantissa == 0) {
            exponent = 0;
            return;
        }
        while ((mantissa & 1) == 0) {
            mantissa >>= 1;
            ++exponent;
        }
    }

    bool isZero() const { return mantissa == 0; }

    Dyadic operator-() const { return Dyadic(-mantissa, exponent); }

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b) {
        if (a.isZero()) return b;
        if (b.isZero()) return a;
        long e = std::min(a.exponent, b.exponent);
        BigInt m = (a.mantissa << (a.exponent - e)) + (b.mantissa << (b.exponent - e));
        return Dyadic(m, e);
    }
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b) {
        return Dyadic(a.mantissa * b.mantissa, a.exponent + b.exponent);
    }

    // multiply by 2^k (exact, just shifts the exponent)
    Dyadic shifted(long k) const {
        Dyadic d = *this;
        if (!d.isZero()) d.exponent += k;
        return d;
    }

    BigRational toRational() const {
        if (exponent >= 0) return BigRational(mantissa << exponent);
        return BigRational(mantissa, BigInt(1) << (-exponent));
    }

    double toDouble() const {
        return std::ldexp(mantissa.convert_to<double>(), static_cast<int>(exponent));
    }

    friend bool operator==(const Dyadic &a, const Dyadic &b) {
        return a.mantissa == b.mantissa && a.exponent == b.exponent;
    }
    friend bool operator<(const Dyadic &a, const Dyadic &b) {
        return a.toRational() < b.toRational();
    }
    friend bool operator<=(const Dyadic &a, const Dyadic &b) {
        return a == b || a < b;
    }
};

}  // namespace tiling
