#include "gshape/arithstat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gshape {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

std::int64_t ceil_ld(long double a) {
    auto v = static_cast<std::int64_t>(std::ceil(a));
    while (static_cast<long double>(v) < a) ++v;
    while (static_cast<long double>(v - 1) >= a) --v;
    return v;
}

std::int64_t floor_ld(long double b) {
    auto v = static_cast<std::int64_t>(std::floor(b));
    while (static_cast<long double>(v) > b) --v;
    while (static_cast<long double>(v + 1) <= b) ++v;
    return v;
}

/// r2(n) for 0 <= n <= n_max.
std::vector<std::int64_t> r2_table(std::int64_t n_max) {
    const auto mults = norm_multiplicities(n_max);
    std::vector<std::int64_t> r2(mults.size());
    for (std::size_t i = 0; i < mults.size(); ++i) r2[i] = mults[i].count;
    return r2;
}

// The exact inequality defining the search region.  Both the production
// kernel and its callers share these; the naive test oracle re-derives them
// independently from the same conventions.
struct Region {
    long double x2;            // x^2
    long double r1lo2, r1hi2;  // squared shape band for |f|/|h|
    long double r2lo2, r2hi2;  // squared band for |g|
    std::int64_t ng_lo, ng_hi;

    Region(const Rectangle& r, double x) {
        x2 = static_cast<long double>(x) * static_cast<long double>(x);
        r1lo2 = static_cast<long double>(r.r1lo) * r.r1lo;
        r1hi2 = static_cast<long double>(r.r1hi) * r.r1hi;
        r2lo2 = static_cast<long double>(r.r2lo) * r.r2lo;
        r2hi2 = static_cast<long double>(r.r2hi) * r.r2hi;
        ng_lo = std::max<std::int64_t>(1, ceil_ld(r2lo2));
        ng_hi = floor_ld(r2hi2);
    }

    std::int64_t nh_max(std::int64_t ng) const {
        // Nonempty f-annulus needs max(1, r1lo2*nh) * ng^2 * nh^3 < x2.
        const long double a = std::pow(x2 / (std::max(r1lo2, 1e-30L) * ng * ng), 0.25L);
        const long double b = std::pow(x2 / (static_cast<long double>(ng) * ng), 1.0L / 3.0L);
        return static_cast<std::int64_t>(std::max(a, b)) + 2;
    }

    // Norm range for f given (ng, nh); false when empty.
    bool f_range(std::int64_t ng, std::int64_t nh, std::int64_t& lo, std::int64_t& hi) const {
        lo = std::max<std::int64_t>(1, ceil_ld(r1lo2 * nh));
        std::int64_t cap = floor_ld(r1hi2 * nh);
        const __int128 k = static_cast<__int128>(ng) * ng * nh * nh * nh;
        auto strict_ok = [&](std::int64_t nf) {
            return static_cast<long double>(static_cast<__int128>(nf) * k) < x2;
        };
        // Start from the estimated height bound, clamped by the shape cap so
        // the adjustment below stays in representable range.
        const long double approx = x2 / static_cast<long double>(k);
        std::int64_t hv = cap;
        if (approx < static_cast<long double>(cap))
            hv = static_cast<std::int64_t>(std::floor(approx));
        while (hv < cap && strict_ok(hv + 1)) ++hv;
        while (hv >= lo && !strict_ok(hv)) --hv;
        hi = std::min(cap, hv);
        return hi >= lo;
    }
};

struct ElemInfo {
    GaussianInt z;
    bool squarefree = false;
    std::int64_t max_sq_q = 0;           // largest prime-ideal norm occurring squared
    std::vector<std::int32_t> primes;    // distinct prime ids, sorted
};

struct PrimeTable {
    std::vector<GaussianPrime> by_id;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int32_t> ids;

    std::int32_t intern(const GaussianPrime& p) {
        const auto key = std::pair(p.generator.re, p.generator.im);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        const auto id = static_cast<std::int32_t>(by_id.size());
        by_id.push_back(p);
        ids.emplace(key, id);
        return id;
    }
};

struct ElemSet {
    std::vector<ElemInfo> infos;
    std::vector<std::vector<std::uint32_t>> by_norm;  // norm -> indices
};

/// Enumerates all z != 0 with N(z) <= max_norm and factors each via a
/// smallest-prime-factor sieve on the norm.
ElemSet build_elems(std::int64_t max_norm, PrimeTable& table) {
    ElemSet set;
    set.by_norm.assign(static_cast<std::size_t>(max_norm) + 1, {});

    std::vector<std::int32_t> spf(static_cast<std::size_t>(max_norm) + 1, 0);
    for (std::int64_t i = 2; i <= max_norm; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= max_norm; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
    std::map<std::int64_t, GaussianInt> split_pi;
    auto pi_for = [&](std::int64_t p) {
        auto it = split_pi.find(p);
        if (it != split_pi.end()) return it->second;
        const GaussianInt pi = gcd(GaussianInt(p, 0), GaussianInt(sqrt_minus_one_mod(p), 1));
        split_pi.emplace(p, pi);
        return pi;
    };

    const std::int64_t a_max = isqrt64(max_norm);
    for (std::int64_t a = -a_max; a <= a_max; ++a) {
        const std::int64_t b_max = isqrt64(max_norm - a * a);
        for (std::int64_t b = -b_max; b <= b_max; ++b) {
            const GaussianInt z(a, b);
            if (z.is_zero()) continue;
            ElemInfo info;
            info.z = z;
            info.squarefree = true;

            std::int64_t n = norm(z);
            const std::int64_t nz = n;
            while (n > 1) {
                const std::int64_t p = spf[static_cast<std::size_t>(n)];
                int a_p = 0;
                while (n % p == 0) {
                    n /= p;
                    ++a_p;
                }
                auto note = [&](const GaussianPrime& gp, int exp) {
                    if (exp <= 0) return;
                    info.primes.push_back(table.intern(gp));
                    if (exp >= 2) {
                        info.squarefree = false;
                        info.max_sq_q = std::max(info.max_sq_q, gp.normQ);
                    }
                };
                if (p == 2) {
                    note({GaussianInt(1, 1), 2}, a_p);
                } else if (p % 4 == 3) {
                    note({GaussianInt(p, 0), p * p}, a_p / 2);
                } else {
                    const GaussianInt pi = pi_for(p);
                    GaussianInt rest = z;
                    int v1 = 0;
                    while (v1 < a_p && divides(pi, rest)) {
                        rest = div_exact(rest, pi);
                        ++v1;
                    }
                    note({pi, p}, v1);
                    note({canonical_associate(conj(pi)), p}, a_p - v1);
                }
            }
            std::sort(info.primes.begin(), info.primes.end());
            set.by_norm[static_cast<std::size_t>(nz)].push_back(
                static_cast<std::uint32_t>(set.infos.size()));
            set.infos.push_back(std::move(info));
        }
    }
    return set;
}

bool disjoint_sorted(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

std::vector<std::int32_t> union_sorted(const std::vector<std::int32_t>& a,
                                       const std::vector<std::int32_t>& b) {
    std::vector<std::int32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Rectangle make_rectangle(double r1lo, double r1hi, double r2lo, double r2hi) {
    if (!(r1lo > 0 && r1lo < r1hi && r2lo > 0 && r2lo < r2hi))
        throw std::invalid_argument("rectangle bounds must satisfy 0 < lo < hi");
    return Rectangle{r1lo, r1hi, r2lo, r2hi};
}

double height(GaussianInt f, GaussianInt g, GaussianInt h) {
    if (f.is_zero() || g.is_zero() || h.is_zero())
        throw std::invalid_argument("height: zero argument");
    const long double nf = static_cast<long double>(norm(f));
    const long double ng = static_cast<long double>(norm(g));
    const long double nh = static_cast<long double>(norm(h));
    return static_cast<double>(std::sqrt(nf) * ng * nh * std::sqrt(nh));
}

bool is_strongly_carefree(GaussianInt f, GaussianInt g, GaussianInt h) {
    if (f.is_zero() || g.is_zero() || h.is_zero())
        throw std::invalid_argument("is_strongly_carefree: zero argument");
    if (!is_squarefree(f) || !is_squarefree(g) || !is_squarefree(h)) return false;
    return gcd(f, g).is_unit() && gcd(f, h).is_unit() && gcd(g, h).is_unit();
}

CountResult count_triples(const Rectangle& r, double x, CountMode mode, int threads) {
    if (!(x >= 1)) throw std::invalid_argument("count_triples: x >= 1 required");
    make_rectangle(r.r1lo, r.r1hi, r.r2lo, r.r2hi);
    const Region reg(r, x);
    const int nt = resolve_threads(threads);

    CountResult out;
    out.x = x;
    out.rectangle = r;
    if (reg.ng_hi < reg.ng_lo) return out;

    // Global norm bounds for the sieve tables.
    std::int64_t nh_cap = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng)
        nh_cap = std::max(nh_cap, reg.nh_max(ng));
    const std::int64_t nf_cap =
        std::max<std::int64_t>(1, floor_ld(reg.r1hi2 * static_cast<long double>(nh_cap)) + 1);
    const std::int64_t table_cap = std::max({nf_cap, nh_cap, reg.ng_hi});

    const std::vector<std::int64_t> r2 = r2_table(table_cap);
    std::vector<std::int64_t> cum(r2.size());  // # of z != 0 with N(z) <= n
    std::int64_t acc = 0;
    for (std::size_t n = 0; n < r2.size(); ++n) {
        if (n > 0) acc += r2[n];
        cum[n] = acc;
    }
    auto annulus_count = [&cum](std::int64_t lo, std::int64_t hi) {
        if (hi < lo) return std::int64_t{0};
        return cum[static_cast<std::size_t>(hi)] - cum[static_cast<std::size_t>(lo - 1)];
    };

    if (mode == CountMode::all) {
        std::int64_t total = 0;
        for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng) {
            if (r2[static_cast<std::size_t>(ng)] == 0) continue;
            const std::int64_t hmax = reg.nh_max(ng);
            std::int64_t sub = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt) reduction(+ : sub)
            for (std::int64_t nh = 1; nh <= hmax; ++nh) {
                if (r2[static_cast<std::size_t>(nh)] == 0) continue;
                std::int64_t lo, hi;
                if (!reg.f_range(ng, nh, lo, hi)) continue;
                sub += r2[static_cast<std::size_t>(nh)] * annulus_count(lo, hi);
            }
            total += r2[static_cast<std::size_t>(ng)] * sub;
        }
        out.total = total;
        return out;
    }

    // Carefree mode: enumerate elements with cached factorizations.
    PrimeTable primes;
    const ElemSet elems = build_elems(table_cap, primes);

    std::int64_t total = 0, care = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng) {
        for (const std::uint32_t gi : elems.by_norm[static_cast<std::size_t>(ng)]) {
            const ElemInfo& ginfo = elems.infos[gi];
            const std::int64_t hmax = reg.nh_max(ng);
            std::int64_t sub_total = 0, sub_care = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt) \
    reduction(+ : sub_total, sub_care)
            for (std::int64_t nh = 1; nh <= hmax; ++nh) {
                std::int64_t lo, hi;
                if (!reg.f_range(ng, nh, lo, hi)) continue;
                const std::int64_t all_f = annulus_count(lo, hi);
                if (all_f == 0) continue;
                for (const std::uint32_t hidx : elems.by_norm[static_cast<std::size_t>(nh)]) {
                    const ElemInfo& hinfo = elems.infos[hidx];
                    sub_total += all_f;
                    if (!ginfo.squarefree || !hinfo.squarefree) continue;
                    if (!disjoint_sorted(ginfo.primes, hinfo.primes)) continue;
                    const auto blocked = union_sorted(ginfo.primes, hinfo.primes);
                    for (std::int64_t nf = lo; nf <= hi; ++nf) {
                        for (const std::uint32_t fi : elems.by_norm[static_cast<std::size_t>(nf)]) {
                            const ElemInfo& finfo = elems.infos[fi];
                            if (finfo.squarefree && disjoint_sorted(finfo.primes, blocked))
                                ++sub_care;
                        }
                    }
                }
            }
            total += sub_total;
            care += sub_care;
        }
    }
    out.total = total;
    out.carefree = care;
    return out;
}

std::vector<GaussianInt> residue_system(GaussianInt modulus) {
    if (modulus.is_zero()) throw std::invalid_argument("residue_system: zero modulus");
    const std::int64_t n = norm(modulus);
    if (n > 4096) throw budget_exceeded();
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<GaussianInt> out;
    out.reserve(static_cast<std::size_t>(n));
    const GaussianInt wbar = conj(modulus);
    for (std::int64_t a = 0; a < n && static_cast<std::int64_t>(out.size()) < n; ++a) {
        for (std::int64_t b = 0; b < n && static_cast<std::int64_t>(out.size()) < n; ++b) {
            const GaussianInt key = GaussianInt(a, b) * wbar;
            const std::int64_t kr = ((key.re % n) + n) % n;
            const std::int64_t ki = ((key.im % n) + n) % n;
            char& flag = seen[static_cast<std::size_t>(kr) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(ki)];
            if (!flag) {
                flag = 1;
                out.push_back(GaussianInt(a, b));
            }
        }
    }
    return out;
}

LocalDensity local_density_bruteforce(const GaussianPrime& p) {
    if (p.normQ > 31) throw budget_exceeded();
    const GaussianInt pi = p.generator;
    const GaussianInt pi2 = pi * pi;
    const std::vector<GaussianInt> residues = residue_system(pi2);
    const auto count = static_cast<std::int64_t>(residues.size());

    std::vector<std::int8_t> val(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        const GaussianInt z = residues[i];
        if (divides(pi2, z)) val[i] = 2;
        else if (divides(pi, z)) val[i] = 1;
        else val[i] = 0;
    }

    std::int64_t admissible = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : admissible)
    for (std::int64_t i = 0; i < count; ++i) {
        const int vf = val[static_cast<std::size_t>(i)];
        if (vf == 2) continue;
        for (std::int64_t j = 0; j < count; ++j) {
            const int vg = val[static_cast<std::size_t>(j)];
            if (vg == 2) continue;
            const int used = (vf > 0) + (vg > 0);
            if (used == 2) continue;
            for (std::int64_t k = 0; k < count; ++k) {
                const int vh = val[static_cast<std::size_t>(k)];
                admissible += (vh < 2) && (used + (vh > 0) <= 1);
            }
        }
    }
    return LocalDensity{p.normQ, admissible, count * count * count};
}

std::int64_t fiber_count(const GaussianPrime& p, GResidueClass cls) {
    const std::int64_t q = p.normQ;
    switch (cls) {
        case GResidueClass::divisible_sq: return 0;
        case GResidueClass::coprime: return q * q * q * q - 3 * q * q + 2 * q;
        case GResidueClass::exactly_once: return (q * q - q) * (q * q - q);
    }
    throw std::invalid_argument("fiber_count: bad class");
}

EulerProduct euler_product(std::int64_t q_max) {
    if (q_max < 2) throw std::invalid_argument("euler_product: q_max >= 2 required");
    long double prod = 1.0L;
    // Sieve rational primes up to q_max; split primes contribute twice, the
    // inert ones enter at norm p^2.
    std::vector<bool> composite(static_cast<std::size_t>(q_max) + 1, false);
    for (std::int64_t p = 2; p <= q_max; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t k = p * p; k <= q_max; k += p)
            composite[static_cast<std::size_t>(k)] = true;
        auto factor_at = [](long double q) { return 1.0L - 3.0L / (q * q) + 2.0L / (q * q * q); };
        if (p == 2) {
            prod *= factor_at(2.0L);
        } else if (p % 4 == 1) {
            const long double f = factor_at(static_cast<long double>(p));
            prod *= f * f;
        } else if (p * p <= q_max) {
            prod *= factor_at(static_cast<long double>(p) * p);
        }
    }
    return EulerProduct{static_cast<double>(prod), 6.0 / static_cast<double>(q_max), q_max};
}

GSum g_sum(double r2lo, double r2hi) {
    if (!(r2lo > 0 && r2lo < r2hi)) throw std::invalid_argument("g_sum: bad band");
    const long double lo2 = static_cast<long double>(r2lo) * r2lo;
    const long double hi2 = static_cast<long double>(r2hi) * r2hi;
    const std::int64_t n_lo = std::max<std::int64_t>(1, ceil_ld(lo2));
    const std::int64_t n_hi = floor_ld(hi2);
    GSum out;
    if (n_hi < n_lo) return out;

    PrimeTable primes;
    ElemSet elems = build_elems(n_hi, primes);
    long double sum = 0.0L;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        for (const std::uint32_t gi : elems.by_norm[static_cast<std::size_t>(n)]) {
            const ElemInfo& info = elems.infos[gi];
            if (!info.squarefree) continue;
            long double alpha = 1.0L / static_cast<long double>(n);
            for (const std::int32_t pid : info.primes) {
                const long double q = static_cast<long double>(primes.by_id[
                    static_cast<std::size_t>(pid)].normQ);
                alpha *= q / (q + 2.0L);
            }
            sum += alpha;
            ++out.terms;
        }
    }
    out.value = static_cast<double>(sum);
    return out;
}

double theoretical_density_all(const Rectangle& r) {
    make_rectangle(r.r1lo, r.r1hi, r.r2lo, r.r2hi);
    const long double lo2 = static_cast<long double>(r.r2lo) * r.r2lo;
    const long double hi2 = static_cast<long double>(r.r2hi) * r.r2hi;
    const std::int64_t n_lo = std::max<std::int64_t>(1, ceil_ld(lo2));
    const std::int64_t n_hi = floor_ld(hi2);
    if (n_hi < n_lo) return 0.0;
    const std::vector<std::int64_t> r2 = r2_table(n_hi);
    long double s = 0.0L;
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        s += static_cast<long double>(r2[static_cast<std::size_t>(n)]) / n;
    const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
    return static_cast<double>(pi2 * (static_cast<long double>(r.r1hi) - r.r1lo) * s);
}

double theoretical_density_carefree(const Rectangle& r, std::int64_t q_max) {
    make_rectangle(r.r1lo, r.r1hi, r.r2lo, r.r2hi);
    const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
    const GSum gs = g_sum(r.r2lo, r.r2hi);
    const EulerProduct ep = euler_product(q_max);
    return static_cast<double>(pi2 * (static_cast<long double>(r.r1hi) - r.r1lo) * gs.value *
                               ep.value);
}

std::int64_t tail_mass(const Rectangle& r, double x, std::int64_t y, int threads) {
    if (y < 2) throw std::invalid_argument("tail_mass: y >= 2 required");
    if (!(x >= 1)) throw std::invalid_argument("tail_mass: x >= 1 required");
    make_rectangle(r.r1lo, r.r1hi, r.r2lo, r.r2hi);
    const Region reg(r, x);
    const int nt = resolve_threads(threads);
    if (reg.ng_hi < reg.ng_lo) return 0;

    std::int64_t nh_cap = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng)
        nh_cap = std::max(nh_cap, reg.nh_max(ng));
    const std::int64_t nf_cap =
        std::max<std::int64_t>(1, floor_ld(reg.r1hi2 * static_cast<long double>(nh_cap)) + 1);
    const std::int64_t table_cap = std::max({nf_cap, nh_cap, reg.ng_hi});

    PrimeTable primes;
    const ElemSet elems = build_elems(table_cap, primes);
    const std::vector<std::int64_t> r2 = r2_table(table_cap);
    std::vector<std::int64_t> cum(r2.size());
    std::int64_t acc = 0;
    for (std::size_t n = 0; n < r2.size(); ++n) {
        if (n > 0) acc += r2[n];
        cum[n] = acc;
    }

    auto large_only = [&](const std::vector<std::int32_t>& ids) {
        std::vector<std::int32_t> out;
        for (const std::int32_t id : ids)
            if (primes.by_id[static_cast<std::size_t>(id)].normQ > y) out.push_back(id);
        return out;
    };

    std::int64_t violating = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng) {
        for (const std::uint32_t gi : elems.by_norm[static_cast<std::size_t>(ng)]) {
            const ElemInfo& ginfo = elems.infos[gi];
            const std::int64_t hmax = reg.nh_max(ng);
            std::int64_t sub = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt) reduction(+ : sub)
            for (std::int64_t nh = 1; nh <= hmax; ++nh) {
                std::int64_t lo, hi;
                if (!reg.f_range(ng, nh, lo, hi)) continue;
                for (const std::uint32_t hidx : elems.by_norm[static_cast<std::size_t>(nh)]) {
                    const ElemInfo& hinfo = elems.infos[hidx];
                    // Violations already forced by (g, h) alone.
                    bool forced = ginfo.max_sq_q > y || hinfo.max_sq_q > y;
                    if (!forced) {
                        for (const std::int32_t id : ginfo.primes) {
                            if (primes.by_id[static_cast<std::size_t>(id)].normQ <= y) continue;
                            if (std::binary_search(hinfo.primes.begin(), hinfo.primes.end(), id)) {
                                forced = true;
                                break;
                            }
                        }
                    }
                    if (forced) {
                        sub += cum[static_cast<std::size_t>(hi)] -
                               cum[static_cast<std::size_t>(lo - 1)];
                        continue;
                    }
                    const auto blocked = large_only(union_sorted(ginfo.primes, hinfo.primes));
                    for (std::int64_t nf = lo; nf <= hi; ++nf) {
                        for (const std::uint32_t fi : elems.by_norm[static_cast<std::size_t>(nf)]) {
                            const ElemInfo& finfo = elems.infos[fi];
                            if (finfo.max_sq_q > y || !disjoint_sorted(finfo.primes, blocked))
                                ++sub;
                        }
                    }
                }
            }
            violating += sub;
        }
    }
    return violating;
}

std::int64_t count_admissible_at_ramified(const Rectangle& r, double x, int threads) {
    if (!(x >= 1)) throw std::invalid_argument("count_admissible_at_ramified: x >= 1 required");
    make_rectangle(r.r1lo, r.r1hi, r.r2lo, r.r2hi);
    const Region reg(r, x);
    const int nt = resolve_threads(threads);
    if (reg.ng_hi < reg.ng_lo) return 0;

    std::int64_t nh_cap = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng)
        nh_cap = std::max(nh_cap, reg.nh_max(ng));
    const std::int64_t nf_cap =
        std::max<std::int64_t>(1, floor_ld(reg.r1hi2 * static_cast<long double>(nh_cap)) + 1);
    const std::int64_t table_cap = std::max({nf_cap, nh_cap, reg.ng_hi});

    // v_{(1+i)}(z) = v_2(N(z)), capped at 2; group lattice points by it.
    const std::vector<std::int64_t> r2 = r2_table(table_cap);
    auto val2 = [](std::int64_t n) {
        int v = 0;
        while (v < 2 && n % 2 == 0) {
            n /= 2;
            ++v;
        }
        return v;
    };
    // Per norm, every z of that norm has the same (1+i)-valuation.
    std::int64_t count = 0;
    for (std::int64_t ng = reg.ng_lo; ng <= reg.ng_hi; ++ng) {
        if (r2[static_cast<std::size_t>(ng)] == 0) continue;
        const int vg = val2(ng);
        if (vg == 2) continue;
        const std::int64_t hmax = reg.nh_max(ng);
        std::int64_t sub = 0;
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt) reduction(+ : sub)
        for (std::int64_t nh = 1; nh <= hmax; ++nh) {
            if (r2[static_cast<std::size_t>(nh)] == 0) continue;
            const int vh = val2(nh);
            if (vh == 2 || vg + vh == 2) continue;
            std::int64_t lo, hi;
            if (!reg.f_range(ng, nh, lo, hi)) continue;
            std::int64_t f_count = 0;
            for (std::int64_t nf = lo; nf <= hi; ++nf) {
                if (r2[static_cast<std::size_t>(nf)] == 0) continue;
                const int vf = val2(nf);
                if (vf < 2 && vf + vg + vh <= 1) f_count += r2[static_cast<std::size_t>(nf)];
            }
            sub += r2[static_cast<std::size_t>(nh)] * f_count;
        }
        count += r2[static_cast<std::size_t>(ng)] * sub;
    }
    return count;
}

DensityReport density_report(const Rectangle& r, double x, std::int64_t q_max, int threads) {
    const CountResult cr = count_triples(r, x, CountMode::carefree, threads);
    const GSum gs = g_sum(r.r2lo, r.r2hi);
    const double theo = theoretical_density_carefree(r, q_max);
    DensityReport rep;
    rep.x = x;
    rep.count = cr.carefree;
    rep.empirical = static_cast<double>(cr.carefree) / x;
    rep.theoretical = theo;
    rep.relative_error = theo != 0.0 ? std::abs(rep.empirical - theo) / theo : 0.0;
    rep.euler_truncation = q_max;
    rep.g_terms = gs.terms;
    rep.residual_x14 = std::abs(rep.empirical - theo) * std::pow(x, 0.25);
    return rep;
}

}  // namespace gshape
