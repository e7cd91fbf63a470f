#include "gshape/basis.hpp"

#include <cmath>

namespace gshape {

namespace {

const GaussianInt kOne(1, 0);
const GaussianInt kI(0, 1);
const GaussianInt kOnePlusI(1, 1);

AlphaPoly make_poly(GaussianRational c0, GaussianRational c1, GaussianRational c2,
                    GaussianRational c3) {
    AlphaPoly p;
    p.c = {c0, c1, c2, c3};
    return p;
}

const GaussianRational kZero{GaussianInt(0, 0), 1};
const GaussianRational kUnit{GaussianInt(1, 0), 1};

}  // namespace

IntegralBasis integral_basis(const FghDecomposition& d, CaseId c) {
    if (c == CaseId::no_match) throw unclassified_input();
    const GaussianInt g = d.g, h = d.h;
    const GaussianInt gh = g * h;
    const GaussianInt gh2 = gh * h;
    const GaussianInt w(norm(gh), 0);    // |gh|^2
    const GaussianInt W(norm(gh2), 0);   // |gh^2|^2
    const GaussianInt two_gh = GaussianInt(2, 0) * gh;
    const GaussianInt two_gh2 = GaussianInt(2, 0) * gh2;
    const GaussianInt opi_gh = kOnePlusI * gh;
    const GaussianInt opi_gh2 = kOnePlusI * gh2;

    const AlphaPoly one = make_poly(kUnit, kZero, kZero, kZero);
    const AlphaPoly alpha = make_poly(kZero, kUnit, kZero, kZero);
    const AlphaPoly half_inv_onepi = make_poly(ratio(kOne, kOnePlusI), ratio(kOne, kOnePlusI),
                                               kZero, kZero);  // (1+alpha)/(1+i)

    AlphaPoly u2, u3, u4;
    switch (c) {
        case CaseId::c1: {
            const GaussianInt D = GaussianInt(2, 2) * gh;   // 2(1+i)gh
            const GaussianInt D4 = GaussianInt(4, 0) * gh2;
            u2 = half_inv_onepi;
            u3 = make_poly(ratio(kI * w, D), ratio(kOnePlusI * w, D), ratio(kOne, D), kZero);
            u4 = make_poly(ratio(W, D4), ratio(W, D4), ratio(W, D4), ratio(kOne, D4));
            break;
        }
        case CaseId::c2: {
            const GaussianInt D = GaussianInt(2, 2) * gh;
            const GaussianInt D4 = GaussianInt(4, 0) * gh2;
            u2 = half_inv_onepi;
            u3 = make_poly(ratio(-kI * w, D), ratio(kOnePlusI * w, D), ratio(kOne, D), kZero);
            u4 = make_poly(ratio(GaussianInt(2, -1) * W, D4), ratio(W, D4), ratio(kI * W, D4),
                           ratio(kOne, D4));
            break;
        }
        case CaseId::c3:
            u2 = alpha;
            u3 = make_poly(GaussianRational(kOne, 2), kZero, ratio(kOne, two_gh), kZero);
            u4 = make_poly(kZero, GaussianRational(kOne, 2), kZero, ratio(kOne, two_gh2));
            break;
        case CaseId::c4:
            u2 = alpha;
            u3 = make_poly(GaussianRational(kI, 2), kZero, ratio(kOne, two_gh), kZero);
            u4 = make_poly(kZero, GaussianRational(kI, 2), kZero, ratio(kOne, two_gh2));
            break;
        case CaseId::c5:
            u2 = alpha;
            u3 = make_poly(ratio(kOne, kOnePlusI), kZero, ratio(kOne, opi_gh), kZero);
            u4 = make_poly(kZero, GaussianRational(kOne, 2), kZero, ratio(kOne, two_gh2));
            break;
        case CaseId::c6:
            u2 = alpha;
            u3 = make_poly(ratio(kOne, kOnePlusI), kZero, ratio(kOne, opi_gh), kZero);
            u4 = make_poly(kZero, GaussianRational(kI, 2), kZero, ratio(kOne, two_gh2));
            break;
        case CaseId::c7:
            u2 = alpha;
            u3 = make_poly(ratio(w, opi_gh), kZero, ratio(kOne, opi_gh), kZero);
            u4 = make_poly(ratio(W, two_gh2), ratio(W, two_gh2), ratio(W, two_gh2),
                           ratio(kOne, two_gh2));
            break;
        case CaseId::c8:
            u2 = alpha;
            u3 = make_poly(ratio(w, two_gh), ratio(kOnePlusI * w, two_gh), ratio(kOne, two_gh),
                           kZero);
            u4 = make_poly(kZero, ratio(W, two_gh2), ratio(kOnePlusI * W, two_gh2),
                           ratio(kOne, two_gh2));
            break;
        case CaseId::c9:
            u2 = alpha;
            u3 = make_poly(ratio(kI * w, two_gh), kZero, ratio(kOne, two_gh), kZero);
            u4 = make_poly(ratio(kI * W, two_gh2), ratio(kI * W, two_gh2), ratio(W, two_gh2),
                           ratio(kOne, two_gh2));
            break;
        case CaseId::c10: {
            const GaussianInt D = GaussianInt(2, 2) * gh2;  // 2(1+i)gh^2
            u2 = half_inv_onepi;
            u3 = make_poly(ratio(w, two_gh), kZero, ratio(kOne, two_gh), kZero);
            u4 = make_poly(ratio(W, D), ratio(W, D), ratio(W, D), ratio(kOne, D));
            break;
        }
        case CaseId::c11:
            u2 = alpha;
            u3 = make_poly(kZero, kZero, ratio(kOne, gh), kZero);
            u4 = make_poly(kZero, kZero, kZero, ratio(kOne, gh2));
            break;
        case CaseId::c12:
            u2 = alpha;
            u3 = make_poly(kZero, kZero, ratio(kOne, gh), kZero);
            u4 = make_poly(kZero, ratio(kI, kOnePlusI), kZero, ratio(kOne, opi_gh2));
            break;
        default:
            throw unclassified_input();
    }

    IntegralBasis b;
    b.case_id = c;
    b.elements = {one, u2, u3, u4, times_i(one), times_i(u2), times_i(u3), times_i(u4)};
    return b;
}

namespace {

using Complex = std::complex<long double>;

Complex principal_root(GaussianInt m) {
    // |alpha| = |m|^{1/4} = N(m)^{1/8}
    const long double r = std::pow(static_cast<long double>(norm(m)), 0.125L);
    const long double theta = std::atan2(static_cast<long double>(m.im),
                                         static_cast<long double>(m.re)) / 4.0L;
    return std::polar(r, theta);
}

Complex evaluate(const AlphaPoly& e, Complex x) {
    Complex acc = to_complex(e.c[3]);
    for (int j = 2; j >= 0; --j) acc = acc * x + to_complex(e.c[j]);
    return acc;
}

}  // namespace

std::array<Complex, 8> embed(const AlphaPoly& e, GaussianInt m, int root_rotation) {
    if (m.is_zero()) throw std::invalid_argument("embed: m = 0");
    const Complex i_unit(0.0L, 1.0L);
    Complex alpha = principal_root(m);
    for (int r = ((root_rotation % 4) + 4) % 4; r > 0; --r) alpha *= i_unit;

    const AlphaPoly ebar = conj_coefficients(e);
    std::array<Complex, 8> out;
    Complex x = alpha;
    for (int k = 0; k < 4; ++k) {
        out[static_cast<std::size_t>(k)] = evaluate(e, x);
        out[static_cast<std::size_t>(k + 4)] = evaluate(ebar, x);
        x *= i_unit;
    }
    return out;
}

bool is_algebraic_integer(const AlphaPoly& e, GaussianInt m) {
    const Complex i_unit(0.0L, 1.0L);
    Complex x = principal_root(m);
    std::array<Complex, 4> roots;
    for (auto& r : roots) {
        r = evaluate(e, x);
        x *= i_unit;
    }
    // Expand prod (X - root); poly[0] is the leading coefficient.
    std::array<Complex, 5> poly{Complex(1.0L), {}, {}, {}, {}};
    int deg = 0;
    for (const Complex& r : roots) {
        ++deg;
        for (int j = deg; j >= 1; --j)
            poly[static_cast<std::size_t>(j)] -= r * poly[static_cast<std::size_t>(j - 1)];
    }
    for (const Complex& cf : poly) {
        // Beyond ~1e17 the 1e-6 tolerance is below the rounding grid, so the
        // test cannot certify anything.
        if (std::abs(cf.real()) > 9e17L || std::abs(cf.imag()) > 9e17L) return false;
        const auto rr = static_cast<long double>(std::llround(cf.real()));
        const auto ri = static_cast<long double>(std::llround(cf.imag()));
        if (std::abs(cf - Complex(rr, ri)) > 1e-6L) return false;
    }
    return true;
}

}  // namespace gshape
