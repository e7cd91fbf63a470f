#pragma once

// Decomposition m = f*g^2*h^3 with f, g, h squarefree and pairwise coprime,
// and the twelve-way congruence classification of (m, f, g, h).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gshape/gaussian.hpp"

namespace gshape {

struct not_fourth_power_free : std::runtime_error {
    not_fourth_power_free() : std::runtime_error("m is not fourth-power-free") {}
};

struct FghDecomposition {
    GaussianInt m;
    GaussianInt f;  // exponent-1 part; absorbs the unit of m
    GaussianInt g;  // exponent-2 part, canonical associate
    GaussianInt h;  // exponent-3 part, canonical associate
};

enum class CaseId : int {
    no_match = 0,
    c1 = 1, c2 = 2, c3 = 3, c4 = 4, c5 = 5, c6 = 6,
    c7 = 7, c8 = 8, c9 = 9, c10 = 10, c11 = 11, c12 = 12,
};

inline int case_number(CaseId c) { return static_cast<int>(c); }

struct CaseMatch {
    std::vector<CaseId> matches;  // ascending
    CaseId primary = CaseId::no_match;
};

/// Splits m by prime exponent: 1 -> f, 2 -> g, 3 -> h; the unit of the
/// factorization multiplies f.  Throws not_fourth_power_free if any exponent
/// is >= 4, std::invalid_argument for m = 0.
FghDecomposition decompose(GaussianInt m);

/// True iff modulus | (z - target) in Z[i].  modulus != 0.
bool residue_match(GaussianInt z, GaussianInt target, GaussianInt modulus);

/// Evaluates all twelve row conditions; primary is the smallest matching row,
/// which makes rows 3/4 take precedence over the overlapping rows 5/6.
/// An empty match set is legal and yields primary = no_match.
CaseMatch classify(const FghDecomposition& d);

struct AuditClassTally {
    GaussianInt residue;  // representative of m mod (1+i)^6, i.e. mod 8
    std::int64_t none = 0;
    std::int64_t single = 0;
    std::int64_t multi = 0;
};

struct AuditReport {
    std::int64_t norm_bound = 0;
    std::int64_t scanned = 0;              // fourth-power-free m examined
    std::int64_t rejected_fourth_power = 0;
    std::vector<AuditClassTally> by_class;  // nonempty tallies, by (re mod 8, im mod 8)
    std::vector<GaussianInt> unmatched;                       // capped at 64
    std::vector<std::pair<GaussianInt, std::vector<CaseId>>> multi_matched;  // capped at 64
    // The two competing predicates for row 2 found in different places:
    std::int64_t case2_m_1_4i_mod8 = 0;  // m = 1+4i (mod 8)
    std::int64_t case2_m_5_mod16 = 0;    // m = 5 (mod 16)
    std::int64_t case2_both_predicates = 0;
};

/// Scans every fourth-power-free m with norm(m) <= sample_bound, tabulating
/// match-set sizes per residue class of m mod (1+i)^6 and recording unmatched
/// and multiply-matched witnesses.
AuditReport audit_partition(std::int64_t sample_bound);

}  // namespace gshape
