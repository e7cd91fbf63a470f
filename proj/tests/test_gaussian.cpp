#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "gshape/gaussian.hpp"

using namespace gshape;

TEST_CASE("norm basics") {
    CHECK(norm(GaussianInt(1, 1)) == 2);
    CHECK(norm(GaussianInt(0, 0)) == 0);
    CHECK(norm(GaussianInt(2, 1)) == 5);
    CHECK(norm(GaussianInt(-3, 4)) == 25);
}

TEST_CASE("norm overflow is detected") {
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(norm(GaussianInt(big, big)), std::overflow_error);
}

TEST_CASE("norm is multiplicative on random pairs") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
    for (int t = 0; t < 1000; ++t) {
        const GaussianInt a(coeff(rng), coeff(rng));
        const GaussianInt b(coeff(rng), coeff(rng));
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("canonical associate picks re > 0, im >= 0") {
    CHECK(canonical_associate(GaussianInt(1, 1)) == GaussianInt(1, 1));
    CHECK(canonical_associate(GaussianInt(-1, 1)) == GaussianInt(1, 1));
    CHECK(canonical_associate(GaussianInt(0, 3)) == GaussianInt(3, 0));
    CHECK(canonical_associate(GaussianInt(0, 1)) == GaussianInt(1, 0));
    CHECK(canonical_associate(GaussianInt(0, 0)) == GaussianInt(0, 0));
    for (const GaussianInt z : {GaussianInt(3, -7), GaussianInt(-4, -2), GaussianInt(5, 0)}) {
        const GaussianInt c = canonical_associate(z);
        CHECK(c.re > 0);
        CHECK(c.im >= 0);
        CHECK(canonical_unit(z) * z == c);
    }
}

TEST_CASE("gcd worked examples") {
    CHECK(gcd(GaussianInt(1, 1), GaussianInt(2, 0)) == GaussianInt(1, 1));
    CHECK(gcd(GaussianInt(3, 0), GaussianInt(5, 0)) == GaussianInt(1, 0));

    // -20+15i = (1+2i)(2+i)^3, established by direct multiplication.
    const GaussianInt p(1, 2), q(2, 1);
    const GaussianInt prod = p * q * q * q;
    CHECK(prod == GaussianInt(-20, 15));
    CHECK(gcd(prod, q) == q);

    CHECK_THROWS_AS(gcd(GaussianInt(0, 0), GaussianInt(0, 0)), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments and is associative with scaling") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    for (int t = 0; t < 300; ++t) {
        const GaussianInt a(coeff(rng), coeff(rng));
        const GaussianInt b(coeff(rng), coeff(rng));
        const GaussianInt c(coeff(rng), coeff(rng));
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const GaussianInt d = gcd(a, b);
        CHECK(divides(d, a));
        CHECK(divides(d, b));
        // gcd(ab, ac) is an associate of a * gcd(b, c).
        const GaussianInt lhs = gcd(a * b, a * c);
        const GaussianInt rhs = canonical_associate(a * gcd(b, c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("factor worked examples") {
    SUBCASE("2i = (1+i)^2") {
        const Factorization f = factor(GaussianInt(0, 2));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first.generator == GaussianInt(1, 1));
        CHECK(f.factors[0].second == 2);
        CHECK(f.unit == GaussianInt(1, 0));  // (1+i)^2 = 2i exactly
        CHECK(f.reconstruct() == GaussianInt(0, 2));
    }
    SUBCASE("-20+15i = (1+2i)(2+i)^3") {
        const Factorization f = factor(GaussianInt(-20, 15));
        REQUIRE(f.factors.size() == 2);
        CHECK(f.unit == GaussianInt(1, 0));
        CHECK(f.factors[0].first.generator == GaussianInt(1, 2));
        CHECK(f.factors[0].second == 1);
        CHECK(f.factors[1].first.generator == GaussianInt(2, 1));
        CHECK(f.factors[1].second == 3);
    }
    SUBCASE("9 = 3^2, 3 inert") {
        const Factorization f = factor(GaussianInt(9, 0));
        REQUIRE(f.factors.size() == 1);
        CHECK(f.factors[0].first.generator == GaussianInt(3, 0));
        CHECK(f.factors[0].first.normQ == 9);
        CHECK(f.factors[0].second == 2);
    }
    CHECK_THROWS_AS(factor(GaussianInt(0, 0)), std::invalid_argument);
}

TEST_CASE("factor round-trips for all z with norm <= 1e4") {
    const std::int64_t bound = 10000;
    const std::int64_t a_max = isqrt64(bound);
    for (std::int64_t a = -a_max; a <= a_max; ++a) {
        const std::int64_t b_max = isqrt64(bound - a * a);
        for (std::int64_t b = -b_max; b <= b_max; ++b) {
            if (a == 0 && b == 0) continue;
            const GaussianInt z(a, b);
            const Factorization f = factor(z);
            REQUIRE(f.reconstruct() == z);
            REQUIRE(f.unit.is_unit());
            // Canonical, pairwise non-associate, sorted generators.
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                const GaussianInt g = f.factors[i].first.generator;
                REQUIRE(canonical_associate(g) == g);
                REQUIRE(f.factors[i].second >= 1);
                if (i > 0) {
                    const auto& prev = f.factors[i - 1].first;
                    REQUIRE(std::tuple(prev.normQ, prev.generator.re, prev.generator.im) <
                            std::tuple(f.factors[i].first.normQ, g.re, g.im));
                }
            }
        }
    }
}

TEST_CASE("count_disk small values, Gauss circle bound, multiplicity sum") {
    CHECK(count_disk(1.0) == 5);
    CHECK(count_disk(2.0) == 13);
    const auto mults = norm_multiplicities(1000 * 1000);
    std::vector<std::int64_t> cumulative(mults.size() + 1, 0);
    for (std::size_t i = 0; i < mults.size(); ++i)
        cumulative[i + 1] = cumulative[i] + mults[i].count;
    for (std::int64_t t = 1; t <= 1000; ++t) {
        const std::int64_t c = count_disk(static_cast<double>(t));
        const double area = M_PI * static_cast<double>(t) * static_cast<double>(t);
        REQUIRE(std::abs(static_cast<double>(c) - area) <= 10.0 * static_cast<double>(t));
        REQUIRE(c == cumulative[static_cast<std::size_t>(t * t) + 1]);
    }
}

TEST_CASE("norm multiplicities") {
    const auto mults = norm_multiplicities(25);
    CHECK(mults[0].count == 1);
    CHECK(mults[1].count == 4);
    CHECK(mults[2].count == 4);
    CHECK(mults[3].count == 0);
    CHECK(mults[5].count == 8);
    CHECK(mults[25].count == 12);  // (0,5),(3,4),(4,3) patterns
    for (const auto& nm : mults)
        if (nm.t2 > 0) CHECK(nm.count % 4 == 0);
}

TEST_CASE("count_disk equals summed multiplicities") {
    for (const std::int64_t t : {1, 2, 3, 5, 10, 31}) {
        const auto mults = norm_multiplicities(t * t);
        std::int64_t sum = 0;
        for (const auto& nm : mults) sum += nm.count;
        CHECK(sum == count_disk(static_cast<double>(t)));
    }
}

TEST_CASE("prime ideals by norm") {
    auto norms = [](std::int64_t q) {
        std::vector<std::int64_t> v;
        for (const auto& p : prime_ideals_up_to(q)) v.push_back(p.normQ);
        return v;
    };
    CHECK(norms(5) == std::vector<std::int64_t>{2, 5, 5});
    CHECK(norms(10) == std::vector<std::int64_t>{2, 5, 5, 9});
    CHECK(norms(13) == std::vector<std::int64_t>{2, 5, 5, 9, 13, 13});
}

TEST_CASE("prime ideal list matches brute-force irreducibility scan") {
    const std::int64_t Q = 200;
    // Irreducibility by trial division over canonical candidates.
    const auto points = [&] {
        std::vector<GaussianInt> pts;
        for (std::int64_t a = 0; a * a <= Q; ++a)
            for (std::int64_t b = 0; a * a + b * b <= Q; ++b) {
                const GaussianInt z(a, b);
                if (norm(z) >= 2 && canonical_associate(z) == z) pts.push_back(z);
            }
        return pts;
    }();
    std::map<std::int64_t, std::int64_t> expected;  // norm -> #irreducible canonical elements
    for (const GaussianInt z : points) {
        bool irreducible = true;
        for (const GaussianInt d : points) {
            if (norm(d) >= norm(z)) continue;
            if (norm(d) >= 2 && divides(d, z)) {
                irreducible = false;
                break;
            }
        }
        if (irreducible) ++expected[norm(z)];
    }
    std::map<std::int64_t, std::int64_t> listed;
    for (const auto& p : prime_ideals_up_to(Q)) {
        ++listed[p.normQ];
        CHECK(canonical_associate(p.generator) == p.generator);
        CHECK(norm(p.generator) == p.normQ);
    }
    CHECK(listed == expected);
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(GaussianInt(3, 0)));
    CHECK(is_squarefree(GaussianInt(1, 1)));
    CHECK_FALSE(is_squarefree(GaussianInt(9, 0)));
    CHECK_FALSE(is_squarefree(GaussianInt(2, 0)));  // 2 = -i (1+i)^2
    CHECK(is_squarefree(GaussianInt(0, 1)));        // unit
}
