#include "gshape/decompose.hpp"

#include <algorithm>
#include <map>

namespace gshape {

FghDecomposition decompose(GaussianInt m) {
    if (m.is_zero()) throw std::invalid_argument("decompose(0)");
    const Factorization fac = factor(m);
    FghDecomposition d;
    d.m = m;
    d.g = GaussianInt(1, 0);
    d.h = GaussianInt(1, 0);
    for (const auto& [p, e] : fac.factors) {
        switch (e) {
            case 1: break;
            case 2: d.g = d.g * p.generator; break;
            case 3: d.h = d.h * p.generator; break;
            default: throw not_fourth_power_free();
        }
    }
    d.g = canonical_associate(d.g);
    d.h = canonical_associate(d.h);
    d.f = div_exact(m, d.g * d.g * d.h * d.h * d.h);
    return d;
}

bool residue_match(GaussianInt z, GaussianInt target, GaussianInt modulus) {
    if (modulus.is_zero()) throw std::invalid_argument("residue_match: zero modulus");
    return divides(modulus, z - target);
}

namespace {

const GaussianInt kOne(1, 0);
const GaussianInt kI(0, 1);
const GaussianInt kTwo(2, 0);
const GaussianInt kFour(4, 0);
const GaussianInt kEight(8, 0);
const GaussianInt kTwoOnePlusI(2, 2);  // 2(1+i)
const GaussianInt kOnePlusI(1, 1);

bool even_zi(GaussianInt z) { return divides(kOnePlusI, z); }

bool pm_one(GaussianInt z, GaussianInt modulus) {
    return residue_match(z, kOne, modulus) || residue_match(z, -kOne, modulus);
}

}  // namespace

CaseMatch classify(const FghDecomposition& d) {
    const GaussianInt m = d.m, f = d.f, g = d.g, h = d.h;
    const GaussianInt fh = f * h;
    const GaussianInt fhbar = f * conj(h);

    const bool m_2i_mod4 = residue_match(m, GaussianInt(0, 2), kFour);

    std::vector<CaseId> hit;
    if (residue_match(m, kOne, kEight)) hit.push_back(CaseId::c1);
    if (residue_match(m, GaussianInt(1, 4), kEight)) hit.push_back(CaseId::c2);
    if (m_2i_mod4 && residue_match(fh, kOne, kFour)) hit.push_back(CaseId::c3);
    if (m_2i_mod4 && residue_match(fh, -kOne, kFour)) hit.push_back(CaseId::c4);
    if (m_2i_mod4 && pm_one(fh, kTwoOnePlusI) && residue_match(fhbar, kOne, kTwoOnePlusI))
        hit.push_back(CaseId::c5);
    if (m_2i_mod4 && pm_one(fh, kTwoOnePlusI) && residue_match(fhbar, -kOne, kTwoOnePlusI))
        hit.push_back(CaseId::c6);
    if (residue_match(m, GaussianInt(3, 2), kFour)) hit.push_back(CaseId::c7);
    if (residue_match(m, GaussianInt(1, 2), kFour)) hit.push_back(CaseId::c8);
    if (residue_match(m, GaussianInt(3, 0), kFour)) hit.push_back(CaseId::c9);
    if (residue_match(m, GaussianInt(5, 0), kEight) || residue_match(m, GaussianInt(5, 4), kEight))
        hit.push_back(CaseId::c10);
    if (even_zi(f) || even_zi(h) || residue_match(m, kI, kTwo)) hit.push_back(CaseId::c11);
    if (residue_match(fh, kI, kTwo) && even_zi(g)) hit.push_back(CaseId::c12);

    CaseMatch out;
    out.matches = std::move(hit);
    out.primary = out.matches.empty() ? CaseId::no_match : out.matches.front();
    return out;
}

AuditReport audit_partition(std::int64_t sample_bound) {
    if (sample_bound < 2) throw std::invalid_argument("audit_partition: bound >= 2 required");
    AuditReport rep;
    rep.norm_bound = sample_bound;

    std::map<std::pair<std::int64_t, std::int64_t>, AuditClassTally> tallies;
    const std::int64_t a_max = isqrt64(sample_bound);
    for (std::int64_t a = -a_max; a <= a_max; ++a) {
        const std::int64_t b_max = isqrt64(sample_bound - a * a);
        for (std::int64_t b = -b_max; b <= b_max; ++b) {
            const GaussianInt m(a, b);
            if (m.is_zero()) continue;
            FghDecomposition d;
            try {
                d = decompose(m);
            } catch (const not_fourth_power_free&) {
                ++rep.rejected_fourth_power;
                continue;
            }
            ++rep.scanned;
            const CaseMatch cm = classify(d);

            const auto key = std::pair(((a % 8) + 8) % 8, ((b % 8) + 8) % 8);
            auto& tally = tallies[key];
            tally.residue = GaussianInt(key.first, key.second);
            if (cm.matches.empty()) {
                ++tally.none;
                if (rep.unmatched.size() < 64) rep.unmatched.push_back(m);
            } else if (cm.matches.size() == 1) {
                ++tally.single;
            } else {
                ++tally.multi;
                if (rep.multi_matched.size() < 64) rep.multi_matched.push_back({m, cm.matches});
            }

            const bool table_pred = residue_match(m, GaussianInt(1, 4), kEight);
            const bool prop_pred = residue_match(m, GaussianInt(5, 0), GaussianInt(16, 0));
            if (table_pred) ++rep.case2_m_1_4i_mod8;
            if (prop_pred) ++rep.case2_m_5_mod16;
            if (table_pred && prop_pred) ++rep.case2_both_predicates;
        }
    }
    rep.by_class.reserve(tallies.size());
    for (auto& [key, tally] : tallies) rep.by_class.push_back(tally);
    return rep;
}

}  // namespace gshape
