#pragma once

// Exact arithmetic in Z[i]: norms, units, gcd, prime splitting, factorization,
// squarefree tests, and enumeration of Gaussian integers by norm.
//
// All arithmetic is 64-bit with overflow checking; anything that would wrap
// throws std::overflow_error.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gshape {

struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}
    constexpr explicit GaussianInt(std::int64_t r) : re(r), im(0) {}

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_unit() const {
        return (re == 1 && im == 0) || (re == -1 && im == 0) ||
               (re == 0 && im == 1) || (re == 0 && im == -1);
    }
    constexpr bool is_one() const { return re == 1 && im == 0; }

    constexpr bool operator==(const GaussianInt&) const = default;
};

namespace detail {
inline std::int64_t add64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussian add overflow");
    return r;
}
inline std::int64_t sub64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("gaussian sub overflow");
    return r;
}
inline std::int64_t mul64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussian mul overflow");
    return r;
}
}  // namespace detail

inline GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {detail::add64(a.re, b.re), detail::add64(a.im, b.im)};
}
inline GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {detail::sub64(a.re, b.re), detail::sub64(a.im, b.im)};
}
inline GaussianInt operator-(GaussianInt a) {
    return {detail::sub64(0, a.re), detail::sub64(0, a.im)};
}
inline GaussianInt operator*(GaussianInt a, GaussianInt b) {
    using namespace detail;
    return {sub64(mul64(a.re, b.re), mul64(a.im, b.im)),
            add64(mul64(a.re, b.im), mul64(a.im, b.re))};
}

inline GaussianInt conj(GaussianInt z) { return {z.re, detail::sub64(0, z.im)}; }
inline GaussianInt times_i(GaussianInt z) { return {detail::sub64(0, z.im), z.re}; }

/// N(z) = re^2 + im^2, always >= 0 and multiplicative.
inline std::int64_t norm(GaussianInt z) {
    using namespace detail;
    return add64(mul64(z.re, z.re), mul64(z.im, z.im));
}

/// The associate u*z (u in {1,i,-1,-i}) with re > 0 and im >= 0; 0 for z = 0.
GaussianInt canonical_associate(GaussianInt z);

/// The unit u such that u*z == canonical_associate(z).
GaussianInt canonical_unit(GaussianInt z);

/// Exact divisibility test: d | z in Z[i].  Requires d != 0.
bool divides(GaussianInt d, GaussianInt z);

/// Exact quotient z/d; throws std::invalid_argument unless d | z.
GaussianInt div_exact(GaussianInt z, GaussianInt d);

/// Canonical-associate gcd via Euclidean division with rounded quotients.
/// Throws std::invalid_argument for (0, 0).
GaussianInt gcd(GaussianInt a, GaussianInt b);

struct GaussianPrime {
    GaussianInt generator;  // canonical associate, irreducible
    std::int64_t normQ = 0; // 2, p (p = 1 mod 4), or p^2 (p = 3 mod 4)

    bool operator==(const GaussianPrime&) const = default;
};

struct Factorization {
    GaussianInt unit;  // in {1, i, -1, -i}
    std::vector<std::pair<GaussianPrime, int>> factors;  // sorted by (normQ, re, im)

    GaussianInt reconstruct() const;
};

/// Exact factorization of z != 0 over Z[i].  Factors the rational norm by trial
/// division and splits each rational prime; exponents are assigned by exact
/// division, so unit * prod(generator^e) == z identically.
Factorization factor(GaussianInt z);

/// True iff no Gaussian prime divides z twice.  z must be nonzero.
bool is_squarefree(GaussianInt z);

/// #{z in Z[i] : |z| <= T}, exact, by row summation.  T > 0.
std::int64_t count_disk(double T);

struct NormMultiplicity {
    std::int64_t t2 = 0;     // the squared radius
    std::int64_t count = 0;  // #{z : |z|^2 = t2}
};

/// Exact representation counts r2(n) for every 0 <= n <= t2_max.
std::vector<NormMultiplicity> norm_multiplicities(std::int64_t t2_max);

/// All prime ideals of Z[i] with norm <= Q, as canonical generators sorted by
/// (normQ, re, im).  Split primes contribute two entries, 2 contributes (1+i),
/// inert p (p = 3 mod 4, p^2 <= Q) contributes one entry of norm p^2.
std::vector<GaussianPrime> prime_ideals_up_to(std::int64_t Q);

/// Largest s with s*s <= n (n >= 0).
std::int64_t isqrt64(std::int64_t n);

/// Smallest x with x^2 = -1 mod p, for a rational prime p = 1 mod 4.
std::int64_t sqrt_minus_one_mod(std::int64_t p);

}  // namespace gshape
