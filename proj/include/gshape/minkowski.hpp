#pragma once

// Gram matrices of the rank-8 lattices, the closed-form matrices and
// transition matrices they are validated against, the projected 6x6 shape
// Gram, shape parameters, and renormalized asymptotics.

#include <optional>
#include <stdexcept>

#include "gshape/basis.hpp"
#include "gshape/matrix.hpp"

namespace gshape {

struct degenerate_lattice : std::runtime_error {
    degenerate_lattice() : std::runtime_error("projected lattice has rank < 6") {}
};

using Gram8 = Mat8;

struct ShapeGram6 {
    Mat6 entries;          // determinant 1
    double normalization;  // raw Gram = normalization * entries
};

struct ShapeParams {
    double lambda1;  // |f| / |h|
    double lambda2;  // |g|
};

struct RenormalizedGram {
    Gram8 scaled;
    bool uniform_scaling;  // true: G / (8 |m|^{1/2}); false: S_m G S_m
    // Predicted stable diagonal of the leading 4x4 block, where the analysis
    // pins one down (cases 11 and 1).
    std::optional<std::array<double, 4>> limit_diag;
};

/// Gram entry (r,s) = sum over the 8 embeddings of tau(e_r) * conj(tau(e_s)).
/// Imaginary parts must vanish to 1e-9 relative; otherwise std::logic_error.
Gram8 gram_numeric(const IntegralBasis& b, GaussianInt m);

/// The printed closed-form Gram for the case, evaluated from f, g, h and
/// powers of |m|.
Gram8 gram_closed_form(CaseId c, const FghDecomposition& d);

/// Change-of-basis matrix from the case-11 basis to the case-k basis
/// (case 10 is expressed in the case-7 basis).  Exact rational entries.
/// Supported cases: 1-10 and 12; anything else throws std::invalid_argument.
Mat8 transition_matrix(CaseId c, const FghDecomposition& d);

/// Gram of the projection of elements 2,3,4,6,7,8 onto the orthogonal
/// complement of span{J(1), J(i)}, scaled to determinant 1.
ShapeGram6 project_shape(const IntegralBasis& b, GaussianInt m);

/// (|f|/|h|, |g|).
ShapeParams shape_params(const FghDecomposition& d);

/// Checks the six identities tying |h|, |f||h|, |gh|, |gh^2|, |g|^2|h|^2,
/// |g|^2|h|^4 to |m| and (lambda1, lambda2), within 1e-12 relative.
bool iden_check(const FghDecomposition& d);

/// Type I (cases 3-6, 11, 12): G / (8 |m|^{1/2}).
/// Type II (cases 1, 2, 7-10): S G S with S = diag(1, |m|^{-1/4}, |m|^{-1/2},
/// |m|^{-1}) repeated for the second block.
RenormalizedGram renormalized_gram(CaseId c, const FghDecomposition& d);

struct SpanRelation {
    Mat8 transition;        // second basis in coordinates of the first
    double abs_det;         // |det|; sublattice index when integral
    bool integral;          // transition entries within 1e-9 of integers
    bool inverse_integral;  // same for the inverse map
};

/// Expresses basis b2 in terms of basis b1 over the common Q-basis
/// {1, alpha, alpha^2, alpha^3, i, i alpha, i alpha^2, i alpha^3} and reports
/// whether the Z-spans coincide (both directions integral, |det| = 1).
SpanRelation basis_span_relation(const IntegralBasis& b1, const IntegralBasis& b2);

}  // namespace gshape
