#pragma once

// Integral bases for the twelve congruence cases, elements represented as
// degree-<=3 polynomials in alpha (alpha^4 = m) with Q(i) coefficients, plus
// the numeric embeddings L -> C^8 and the algebraic-integrality check.

#include <array>
#include <complex>
#include <stdexcept>

#include "gshape/decompose.hpp"
#include "gshape/rational.hpp"

namespace gshape {

struct unclassified_input : std::runtime_error {
    unclassified_input() : std::runtime_error("no congruence case matches this input") {}
};

/// c0 + c1*alpha + c2*alpha^2 + c3*alpha^3.
struct AlphaPoly {
    std::array<GaussianRational, 4> c{};

    bool operator==(const AlphaPoly&) const = default;
};

inline AlphaPoly times_i(const AlphaPoly& e) {
    AlphaPoly r;
    for (int j = 0; j < 4; ++j) r.c[j] = times_i(e.c[j]);
    return r;
}
inline AlphaPoly conj_coefficients(const AlphaPoly& e) {
    AlphaPoly r;
    for (int j = 0; j < 4; ++j) r.c[j] = conj(e.c[j]);
    return r;
}

/// Ordered Z-basis [u1, u2, u3, u4, i*u1, i*u2, i*u3, i*u4] with u1 = 1.
struct IntegralBasis {
    std::array<AlphaPoly, 8> elements;
    CaseId case_id = CaseId::no_match;
};

/// Builds the basis for the given case from the decomposition, with all
/// Z[i]-denominators rationalized.  Throws unclassified_input on no_match.
IntegralBasis integral_basis(const FghDecomposition& d, CaseId c);

/// Embedding values of e at the eight field embeddings, ordered
/// (tau_{0,+}, ..., tau_{3,+}, tau_{0,-}, ..., tau_{3,-}): tau_{k,eps} sends
/// alpha to i^k * alpha (alpha the principal fourth root of m) and, for
/// eps = -, conjugates every coefficient before evaluation.
/// root_rotation r replaces alpha by i^r * alpha (the Gram is invariant).
std::array<std::complex<long double>, 8> embed(const AlphaPoly& e, GaussianInt m,
                                               int root_rotation = 0);

/// Numeric integrality test: forms prod_{k=0..3}(x - e(i^k alpha)) and checks
/// every coefficient is within 1e-6 of a Gaussian integer.
bool is_algebraic_integer(const AlphaPoly& e, GaussianInt m);

}  // namespace gshape
