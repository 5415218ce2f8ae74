#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tiling {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps itself in lowest terms with a positive denominator,
// which is exactly the invariant we want for every exact coefficient.
using BigRational = boost::multiprecision::cpp_rational;

enum class Ord { LT, EQ, GT };

inline Ord cmpRat(const BigRational &a, const BigRational &b) {
    if (a < b) return Ord::LT;
    if (a > b) return Ord::GT;
    return Ord::EQ;
}

// Lexicographic order on coefficient vectors; used as the canonical
// sign tie-break for quaternions (no real-valued sign decisions needed).
inline Ord lexCompare(const std::vector<BigRational> &xs,
                      const std::vector<BigRational> &ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("lexCompare: length mismatch");
    for (size_t i = 0; i < xs.size(); ++i) {
        Ord o = cmpRat(xs[i], ys[i]);
        if (o != Ord::EQ) return o;
    }
    return Ord::EQ;
}

inline double ratToDouble(const BigRational &r) {
    return r.convert_to<double>();
}

inline BigRational rat(long num, long den = 1) {
    return BigRational(num, den);
}

// "num/den" with den always present and positive; round-trips exactly.
inline std::string ratString(const BigRational &r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigRational ratFromString(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace tiling
