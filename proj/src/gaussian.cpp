#include "gshape/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace gshape {

GaussianInt canonical_associate(GaussianInt z) {
    if (z.is_zero()) return z;
    GaussianInt c = z;
    for (int k = 0; k < 3 && !(c.re > 0 && c.im >= 0); ++k) c = times_i(c);
    return c;
}

GaussianInt canonical_unit(GaussianInt z) {
    if (z.is_zero()) return GaussianInt(1, 0);
    GaussianInt u(1, 0);
    GaussianInt c = z;
    for (int k = 0; k < 3 && !(c.re > 0 && c.im >= 0); ++k) {
        c = times_i(c);
        u = times_i(u);
    }
    return u;
}

bool divides(GaussianInt d, GaussianInt z) {
    if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
    const std::int64_t n = norm(d);
    const GaussianInt w = z * conj(d);
    return w.re % n == 0 && w.im % n == 0;
}

GaussianInt div_exact(GaussianInt z, GaussianInt d) {
    if (d.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
    const std::int64_t n = norm(d);
    const GaussianInt w = z * conj(d);
    if (w.re % n != 0 || w.im % n != 0)
        throw std::invalid_argument("div_exact: not divisible");
    return {w.re / n, w.im / n};
}

namespace {

// Nearest-integer division of w by n > 0, rounding half away from zero.
std::int64_t round_div(std::int64_t w, std::int64_t n) {
    if (w >= 0) return (w + n / 2) / n;
    return -((-w + n / 2) / n);
}

}  // namespace

GaussianInt gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0)");
    while (!b.is_zero()) {
        const std::int64_t n = norm(b);
        const GaussianInt w = a * conj(b);
        const GaussianInt q(round_div(w.re, n), round_div(w.im, n));
        const GaussianInt r = a - b * q;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

GaussianInt Factorization::reconstruct() const {
    GaussianInt z = unit;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) z = z * p.generator;
    return z;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

std::int64_t sqrt_minus_one_mod(std::int64_t p) {
    auto pow_mod = [p](std::int64_t b, std::int64_t e) {
        __int128 acc = 1, base = b % p;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::int64_t>(acc);
    };
    for (std::int64_t a = 2; a < p; ++a) {
        if (pow_mod(a, (p - 1) / 2) == p - 1) {
            std::int64_t x = pow_mod(a, (p - 1) / 4);
            return std::min(x, p - x);
        }
    }
    throw std::logic_error("sqrt_minus_one_mod: no nonresidue found");
}

Factorization factor(GaussianInt z) {
    if (z.is_zero()) throw std::invalid_argument("factor(0)");
    Factorization out;
    std::int64_t n = norm(z);
    GaussianInt rest = z;

    auto strip = [&rest](GaussianInt pi) {
        int e = 0;
        while (divides(pi, rest)) {
            rest = div_exact(rest, pi);
            ++e;
        }
        return e;
    };

    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        if (p == 2) {
            const GaussianInt pi(1, 1);
            if (int e = strip(pi); e > 0) out.factors.push_back({{pi, 2}, e});
        } else if (p % 4 == 1) {
            const std::int64_t x = sqrt_minus_one_mod(p);
            const GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1));
            for (GaussianInt g : {pi, canonical_associate(conj(pi))})
                if (int e = strip(g); e > 0) out.factors.push_back({{g, p}, e});
        } else {
            const GaussianInt pi(p, 0);
            if (int e = strip(pi); e > 0) out.factors.push_back({{pi, p * p}, e});
        }
    }
    if (n > 1) {
        // n is now a prime; same three-way split.
        const std::int64_t p = n;
        if (p % 4 == 1) {
            const std::int64_t x = sqrt_minus_one_mod(p);
            const GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1));
            for (GaussianInt g : {pi, canonical_associate(conj(pi))})
                if (int e = strip(g); e > 0) out.factors.push_back({{g, p}, e});
        } else if (p == 2) {
            if (int e = strip(GaussianInt(1, 1)); e > 0)
                out.factors.push_back({{GaussianInt(1, 1), 2}, e});
        } else {
            if (int e = strip(GaussianInt(p, 0)); e > 0)
                out.factors.push_back({{GaussianInt(p, 0), p * p}, e});
        }
    }
    if (!rest.is_unit()) throw std::logic_error("factor: non-unit remainder");
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        const auto ka = std::tuple(a.first.normQ, a.first.generator.re, a.first.generator.im);
        const auto kb = std::tuple(b.first.normQ, b.first.generator.re, b.first.generator.im);
        return ka < kb;
    });
    return out;
}

bool is_squarefree(GaussianInt z) {
    const Factorization f = factor(z);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return false;
    return true;
}

std::int64_t count_disk(double T) {
    if (!(T > 0)) throw std::invalid_argument("count_disk: T must be positive");
    const long double t2 = static_cast<long double>(T) * static_cast<long double>(T);
    auto s = static_cast<std::int64_t>(t2);
    while (static_cast<long double>(s + 1) <= t2) ++s;
    while (s > 0 && static_cast<long double>(s) > t2) --s;
    const std::int64_t a_max = isqrt64(s);
    std::int64_t count = 0;
    for (std::int64_t a = -a_max; a <= a_max; ++a)
        count += 2 * isqrt64(s - a * a) + 1;
    return count;
}

std::vector<NormMultiplicity> norm_multiplicities(std::int64_t t2_max) {
    if (t2_max < 0) throw std::invalid_argument("norm_multiplicities: negative bound");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(t2_max) + 1, 0);
    const std::int64_t a_max = isqrt64(t2_max);
    for (std::int64_t a = 0; a <= a_max; ++a) {
        const std::int64_t b_max = isqrt64(t2_max - a * a);
        for (std::int64_t b = 0; b <= b_max; ++b) {
            const std::int64_t w = (a > 0 ? 2 : 1) * (b > 0 ? 2 : 1);
            counts[static_cast<std::size_t>(a * a + b * b)] += w;
        }
    }
    std::vector<NormMultiplicity> out(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        out[i] = {static_cast<std::int64_t>(i), counts[i]};
    return out;
}

std::vector<GaussianPrime> prime_ideals_up_to(std::int64_t Q) {
    if (Q < 2) throw std::invalid_argument("prime_ideals_up_to: Q >= 2 required");
    std::vector<bool> composite(static_cast<std::size_t>(Q) + 1, false);
    std::vector<GaussianPrime> out;
    for (std::int64_t p = 2; p <= Q; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t k = p * p; k <= Q; k += p) composite[static_cast<std::size_t>(k)] = true;
        if (p == 2) {
            out.push_back({GaussianInt(1, 1), 2});
        } else if (p % 4 == 1) {
            const std::int64_t x = sqrt_minus_one_mod(p);
            const GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(x, 1));
            out.push_back({pi, p});
            out.push_back({canonical_associate(conj(pi)), p});
        } else if (p * p <= Q) {
            out.push_back({GaussianInt(p, 0), p * p});
        }
    }
    std::sort(out.begin(), out.end(), [](const GaussianPrime& a, const GaussianPrime& b) {
        return std::tuple(a.normQ, a.generator.re, a.generator.im) <
               std::tuple(b.normQ, b.generator.re, b.generator.im);
    });
    return out;
}

}  // namespace gshape
