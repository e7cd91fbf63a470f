#pragma once

// Counting triples (f, g, h) by height with and without the strongly-carefree
// condition, local densities, Euler products, and density reports.
//
// count_triples and tail_mass parallelize over disjoint h-annulus slices with
// OpenMP; workers are read-only over shared sieve tables and aggregate by
// integer summation, so counts are independent of the thread count.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gshape/gaussian.hpp"

namespace gshape {

struct budget_exceeded : std::runtime_error {
    budget_exceeded() : std::runtime_error("enumeration budget exceeded") {}
};

struct Rectangle {
    double r1lo, r1hi;  // band for |f|/|h|
    double r2lo, r2hi;  // band for |g|
};

/// Validates 0 < lo < hi for both coordinates.
Rectangle make_rectangle(double r1lo, double r1hi, double r2lo, double r2hi);

enum class CountMode { all, carefree };

struct CountResult {
    double x = 0;
    std::int64_t total = 0;     // no arithmetic conditions (N')
    std::int64_t carefree = 0;  // strongly carefree subset (N); 0 in mode all
    Rectangle rectangle{};
};

/// H(f, g, h) = |f| |g|^2 |h|^3.  All inputs nonzero.
double height(GaussianInt f, GaussianInt g, GaussianInt h);

/// True iff f, g, h are squarefree and pairwise coprime.
bool is_strongly_carefree(GaussianInt f, GaussianInt g, GaussianInt h);

/// Exact count of triples (f, g, h) of nonzero Gaussian integers with
/// H < x (strict), |g| in [r2lo, r2hi] and |f|/|h| in [r1lo, r1hi] (closed).
/// Mode all counts f by squared-norm row sums; mode carefree enumerates f and
/// also fills .total.  threads = 0 uses the hardware default.
CountResult count_triples(const Rectangle& r, double x, CountMode mode, int threads = 0);

struct LocalDensity {
    std::int64_t q = 0;          // prime-ideal norm
    std::int64_t admissible = 0; // triples passing both local conditions
    std::int64_t ambient = 0;    // q^6
};

/// Literal enumeration over (Z[i]/p^2)^3 of the residue triples with no
/// coordinate divisible by p^2 and at most one coordinate divisible by p.
/// Throws budget_exceeded for q > 31.
LocalDensity local_density_bruteforce(const GaussianPrime& p);

enum class GResidueClass { divisible_sq, exactly_once, coprime };

/// Fiber sizes over a fixed g-residue class:
///   0 for p^2 | g;  q^4 (1 - 3/q^2 + 2/q^3) for p coprime to g;
///   q^4 (1 - 1/q)^2 for p || g.
std::int64_t fiber_count(const GaussianPrime& p, GResidueClass cls);

struct EulerProduct {
    double value = 0;
    double tail_bound = 0;  // bound on |log tail|: 6 / q_max
    std::int64_t q_max = 0;
};

/// prod over prime ideals of norm <= q_max of (1 - 3/q^2 + 2/q^3); split
/// primes contribute their factor twice.
EulerProduct euler_product(std::int64_t q_max);

struct GSum {
    double value = 0;
    std::int64_t terms = 0;  // squarefree g counted (all associates separately)
};

/// Sum of alpha(g) = (1/|g|^2) prod_{p | g} q/(q+2) over squarefree g with
/// |g| in [r2lo, r2hi].
GSum g_sum(double r2lo, double r2hi);

/// pi^2 (R1 - R1') sum over representable norms v^2 in the band of N_v / v^2.
double theoretical_density_all(const Rectangle& r);

/// pi^2 (R1 - R1') * g_sum * euler_product(q_max).
double theoretical_density_carefree(const Rectangle& r, std::int64_t q_max);

/// Triples in the count_triples region that violate strong carefreeness at
/// some prime ideal of norm > y.
std::int64_t tail_mass(const Rectangle& r, double x, std::int64_t y, int threads = 0);

/// Optional slow path: triples in the same region that are additionally
/// admissible at the ramified prime (1+i), i.e. no coordinate divisible by
/// (1+i)^2 and at most one coordinate divisible by (1+i).  Enumerates every
/// triple.
std::int64_t count_admissible_at_ramified(const Rectangle& r, double x, int threads = 0);

struct DensityReport {
    double empirical = 0;          // N / x
    double theoretical = 0;        // limit density
    double relative_error = 0;
    std::int64_t euler_truncation = 0;
    std::int64_t g_terms = 0;
    double residual_x14 = 0;       // |N/x - limit| * x^{1/4}
    double x = 0;
    std::int64_t count = 0;        // N
};

DensityReport density_report(const Rectangle& r, double x, std::int64_t q_max, int threads = 0);

/// Complete residue system for Z[i]/(modulus), size N(modulus).
/// Throws budget_exceeded when N(modulus) > 4096.
std::vector<GaussianInt> residue_system(GaussianInt modulus);

}  // namespace gshape
