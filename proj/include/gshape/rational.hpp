#pragma once

// Elements of Q(i) stored as (Gaussian integer numerator) / (positive integer
// denominator), always reduced.  Z[i]-denominators are rationalized on entry:
// n/d = n*conj(d)/N(d).

#include <complex>
#include <cstdint>
#include <numeric>

#include "gshape/gaussian.hpp"

namespace gshape {

struct GaussianRational {
    GaussianInt num;
    std::int64_t den = 1;

    GaussianRational() = default;
    GaussianRational(GaussianInt n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("GaussianRational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(std::gcd(std::abs(n.re), std::abs(n.im)), d);
        if (g == 0) g = 1;
        num = GaussianInt(n.re / g, n.im / g);
        den = d / g;
    }
    explicit GaussianRational(GaussianInt n) : GaussianRational(n, 1) {}

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const GaussianRational&) const = default;
};

/// n/d with a Gaussian-integer denominator, rationalized.
inline GaussianRational ratio(GaussianInt n, GaussianInt d) {
    if (d.is_zero()) throw std::invalid_argument("ratio: zero denominator");
    return GaussianRational(n * conj(d), norm(d));
}

inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * GaussianInt(b.den) + b.num * GaussianInt(a.den),
                            detail::mul64(a.den, b.den));
}
inline GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.num, a.den);
}
inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.num * b.num, detail::mul64(a.den, b.den));
}

inline GaussianRational conj(const GaussianRational& a) {
    return GaussianRational(conj(a.num), a.den);
}
inline GaussianRational times_i(const GaussianRational& a) {
    return GaussianRational(times_i(a.num), a.den);
}

inline std::complex<long double> to_complex(const GaussianRational& a) {
    return {static_cast<long double>(a.num.re) / a.den,
            static_cast<long double>(a.num.im) / a.den};
}

/// Exact real and imaginary parts as (numerator, positive denominator).
inline std::pair<std::int64_t, std::int64_t> real_part(const GaussianRational& a) {
    const std::int64_t g = std::gcd(std::abs(a.num.re), a.den);
    return {a.num.re / (g ? g : 1), a.den / (g ? g : 1)};
}
inline std::pair<std::int64_t, std::int64_t> imag_part(const GaussianRational& a) {
    const std::int64_t g = std::gcd(std::abs(a.num.im), a.den);
    return {a.num.im / (g ? g : 1), a.den / (g ? g : 1)};
}

}  // namespace gshape
