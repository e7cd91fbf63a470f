#include "gshape/minkowski.hpp"

#include <cmath>
#include <complex>

namespace gshape {

namespace {

using Complex = std::complex<long double>;

Complex cx(GaussianInt z) {
    return {static_cast<long double>(z.re), static_cast<long double>(z.im)};
}

double rat(std::pair<std::int64_t, std::int64_t> p) {
    return static_cast<double>(p.first) / static_cast<double>(p.second);
}

Gram8 assemble_blocks(const Mat<4>& M, const Mat<4>& N) {
    Gram8 g{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) {
            g[r][s] = M[r][s];
            g[r][s + 4] = N[r][s];
            g[r + 4][s] = -N[r][s];
            g[r + 4][s + 4] = M[r][s];
        }
    return g;
}

struct Scalars {
    long double am;    // |m|
    long double A;     // |m|^{1/2}
    long double B;     // |f||h|
    long double lam;   // |f|/|h|
    long double ngh;   // |g|^2 |h|^2
    long double ngh2;  // |g|^2 |h|^4
    Complex gh, gh2, h;
};

Scalars scalars(const FghDecomposition& d) {
    Scalars s;
    s.am = std::sqrt(static_cast<long double>(norm(d.m)));
    s.A = std::sqrt(s.am);
    s.B = std::sqrt(static_cast<long double>(norm(d.f)) * static_cast<long double>(norm(d.h)));
    s.lam = std::sqrt(static_cast<long double>(norm(d.f)) / static_cast<long double>(norm(d.h)));
    s.ngh = static_cast<long double>(norm(d.g)) * static_cast<long double>(norm(d.h));
    s.ngh2 = static_cast<long double>(norm(d.g)) * static_cast<long double>(norm(d.h)) *
             static_cast<long double>(norm(d.h));
    s.gh = cx(d.g * d.h);
    s.gh2 = cx(d.g * d.h * d.h);
    s.h = cx(d.h);
    return s;
}

}  // namespace

Gram8 gram_numeric(const IntegralBasis& b, GaussianInt m) {
    std::array<std::array<Complex, 8>, 8> vec;
    for (std::size_t r = 0; r < 8; ++r) vec[r] = embed(b.elements[r], m);

    std::array<std::array<Complex, 8>, 8> raw;
    long double scale = 1.0L;
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t s = 0; s < 8; ++s) {
            Complex acc = 0;
            for (std::size_t t = 0; t < 8; ++t) acc += vec[r][t] * std::conj(vec[s][t]);
            raw[r][s] = acc;
            scale = std::max(scale, std::abs(acc.real()));
        }
    Gram8 g{};
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t s = 0; s < 8; ++s) {
            if (std::abs(raw[r][s].imag()) > 1e-9L * scale)
                throw std::logic_error("gram_numeric: non-vanishing imaginary part");
            g[r][s] = static_cast<double>(raw[r][s].real());
        }
    return g;
}

Gram8 gram_closed_form(CaseId c, const FghDecomposition& d) {
    if (c == CaseId::no_match) throw unclassified_input();
    const Scalars s = scalars(d);
    const long double am = s.am, A = s.A, B = s.B, lam = s.lam;
    const Complex i1p(1.0L, 1.0L), i1m(1.0L, -1.0L);
    Mat<4> M{}, N{};

    auto fill = [](Mat<4>& dst, std::initializer_list<long double> vals) {
        auto it = vals.begin();
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t col = 0; col < 4; ++col) dst[r][col] = static_cast<double>(*it++);
    };

    switch (c) {
        case CaseId::c11: {
            fill(M, {8, 0, 0, 0,
                     0, 8 * A, 0, 0,
                     0, 0, 8 * am / s.ngh, 0,
                     0, 0, 0, 8 * am * A / s.ngh2});
            break;
        }
        case CaseId::c3: {
            fill(M, {8, 0, 4, 0,
                     0, 8 * A, 0, 4 * A,
                     4, 0, 2 + 2 * B, 0,
                     0, 4 * A, 0, 2 * A * (1 + lam)});
            break;
        }
        case CaseId::c4: {
            fill(M, {8, 0, 0, 0,
                     0, 8 * A, 0, 0,
                     0, 0, 2 + 2 * B, 0,
                     0, 0, 0, 2 * A * (1 + lam)});
            fill(N, {0, 0, -4, 0,
                     0, 0, 0, -4 * A,
                     4, 0, 0, 0,
                     0, 4 * A, 0, 0});
            break;
        }
        case CaseId::c5: {
            fill(M, {8, 0, 4, 0,
                     0, 8 * A, 0, 4 * A,
                     4, 0, 4 + 4 * B, 0,
                     0, 4 * A, 0, 2 * A * (1 + lam)});
            fill(N, {0, 0, 4, 0,
                     0, 0, 0, 0,
                     -4, 0, 0, 0,
                     0, 0, 0, 0});
            break;
        }
        case CaseId::c6: {
            fill(M, {8, 0, 4, 0,
                     0, 8 * A, 0, 0,
                     4, 0, 4 + 4 * B, 0,
                     0, 0, 0, 2 * A * (1 + lam)});
            fill(N, {0, 0, 4, 0,
                     0, 0, 0, -4 * A,
                     -4, 0, 0, 0,
                     0, 4 * A, 0, 0});
            break;
        }
        case CaseId::c12: {
            fill(M, {8, 0, 0, 0,
                     0, 8 * A, 0, 4 * A,
                     0, 0, 8 * B, 0,
                     0, 4 * A, 0, 4 * A * (1 + lam)});
            fill(N, {0, 0, 0, 0,
                     0, 0, 0, -4 * A,
                     0, 0, 0, 0,
                     0, 4 * A, 0, 0});
            break;
        }
        case CaseId::c7: {
            const long double omega = s.ngh + am;
            const long double sigma = 2 * s.ngh2 * (1 + A + am) + 2 * am * A / s.ngh2;
            const Complex gh1p = s.gh * i1p, h1m = s.h * i1m;
            fill(M, {8, 0, 4 * gh1p.real(), 4 * s.gh2.real(),
                     0, 8 * A, 0, 4 * A * s.gh2.real(),
                     4 * gh1p.real(), 0, 4 * (s.ngh + B), 2 * omega * h1m.real(),
                     4 * s.gh2.real(), 4 * A * s.gh2.real(), 2 * omega * h1m.real(), sigma});
            fill(N, {0, 0, 4 * gh1p.imag(), 4 * s.gh2.imag(),
                     0, 0, 0, 4 * A * s.gh2.imag(),
                     -4 * gh1p.imag(), 0, 0, 2 * omega * h1m.imag(),
                     -4 * s.gh2.imag(), -4 * A * s.gh2.imag(), -2 * omega * h1m.imag(), 0});
            break;
        }
        case CaseId::c10: {
            const long double omega = s.ngh + am;
            const long double sigma = s.ngh2 * (1 + A + am) + am * A / s.ngh2;
            const Complex gh1m = s.gh * i1m, gh2_1p = s.gh2 * i1p, h1p = s.h * i1p;
            fill(M, {8, 4, 4 * s.gh.real(), 2 * gh2_1p.real(),
                     4, 4 * (1 + A), 2 * gh1m.real(), 2 * (1 + A) * s.gh2.real(),
                     4 * s.gh.real(), 2 * gh1m.real(), 2 * s.ngh + 2 * B, omega * h1p.real(),
                     2 * gh2_1p.real(), 2 * (1 + A) * s.gh2.real(), omega * h1p.real(), sigma});
            fill(N, {0, 4, 4 * s.gh.imag(), 2 * gh2_1p.imag(),
                     -4, 0, 2 * gh1m.imag(), 2 * (1 + A) * s.gh2.imag(),
                     -4 * s.gh.imag(), -2 * gh1m.imag(), 0, omega * h1p.imag(),
                     -2 * gh2_1p.imag(), -2 * (1 + A) * s.gh2.imag(), -omega * h1p.imag(), 0});
            break;
        }
        case CaseId::c8: {
            const long double omega = 2 * s.ngh * (1 + 2 * A) + 2 * B;
            const long double sigma = 2 * s.ngh2 * (A + 2 * am) + 2 * am * A / s.ngh2;
            const Complex lambda8 = Complex(2 * A * s.ngh) * s.h * i1p + Complex(2 * am) * s.h * i1m;
            const Complex gh1m = s.gh * i1m;
            fill(M, {8, 0, 4 * s.gh.real(), 0,
                     0, 8 * A, 4 * A * gh1m.real(), 4 * A * s.gh2.real(),
                     4 * s.gh.real(), 4 * A * gh1m.real(), omega, lambda8.real(),
                     0, 4 * A * s.gh2.real(), lambda8.real(), sigma});
            fill(N, {0, 0, 4 * s.gh.imag(), 0,
                     0, 0, 4 * A * gh1m.imag(), 4 * A * s.gh2.imag(),
                     -4 * s.gh.imag(), -4 * A * gh1m.imag(), 0, lambda8.imag(),
                     0, -4 * A * s.gh2.imag(), -lambda8.imag(), 0});
            break;
        }
        case CaseId::c9: {
            const long double omega = 2 * (s.ngh + am);
            const long double sigma = 2 * s.ngh2 * (1 + A + am) + 2 * am * A / s.ngh2;
            fill(M, {8, 0, 4 * s.gh.imag(), 4 * s.gh2.imag(),
                     0, 8 * A, 0, 4 * A * s.gh2.imag(),
                     4 * s.gh.imag(), 0, 2 * s.ngh + 2 * B, omega * s.h.real(),
                     4 * s.gh2.imag(), 4 * A * s.gh2.imag(), omega * s.h.real(), sigma});
            fill(N, {0, 0, -4 * s.gh.real(), -4 * s.gh2.real(),
                     0, 0, 0, -4 * A * s.gh2.real(),
                     4 * s.gh.real(), 0, 0, omega * s.h.imag(),
                     4 * s.gh2.real(), 4 * A * s.gh2.real(), -omega * s.h.imag(), 0});
            break;
        }
        case CaseId::c1: {
            const long double omega = s.ngh * (1 + 2 * A) + B;
            const long double sigma = 0.5L * s.ngh2 * (1 + A + am) + am * A / (2 * s.ngh2);
            const Complex lambda1 = Complex(0.5L * s.ngh) * s.h * i1p + Complex(A * s.ngh) * s.h +
                                    Complex(0.5L * am) * s.h * i1m;
            const Complex z1 = Complex(0.0L, -2.0L) * s.gh + Complex(2 * A) * s.gh * i1m;
            const Complex gh1m = s.gh * i1m, gh2_1m = s.gh2 * i1m;
            fill(M, {8, 4, 2 * gh1m.real(), 2 * s.gh2.real(),
                     4, 4 * (1 + A), z1.real(), (1 + A) * gh2_1m.real(),
                     2 * gh1m.real(), z1.real(), omega, lambda1.real(),
                     2 * s.gh2.real(), (1 + A) * gh2_1m.real(), lambda1.real(), sigma});
            fill(N, {0, 4, 2 * gh1m.imag(), 2 * s.gh2.imag(),
                     -4, 0, z1.imag(), (1 + A) * gh2_1m.imag(),
                     -2 * gh1m.imag(), -z1.imag(), 0, lambda1.imag(),
                     -2 * s.gh2.imag(), -(1 + A) * gh2_1m.imag(), -lambda1.imag(), 0});
            break;
        }
        case CaseId::c2: {
            const long double omega = s.ngh * (1 + A) + B;
            const long double sigma = 0.5L * s.ngh2 * (1 + A + am) + am * A / (2 * s.ngh2);
            const Complex lambda2 = Complex(0.5L * s.ngh * (1 + A) + 0.5L * am) * s.h * i1m;
            const Complex z2 = Complex(2 * (1 + A)) * s.gh;
            const Complex gh1p = s.gh * i1p, gh2_1m = s.gh2 * i1m;
            fill(M, {8, 4, 2 * gh1p.real(), 2 * s.gh2.real(),
                     4, 4 * (1 + A), z2.real(), (1 + A) * gh2_1m.real(),
                     2 * gh1p.real(), z2.real(), omega, lambda2.real(),
                     2 * s.gh2.real(), (1 + A) * gh2_1m.real(), lambda2.real(), sigma});
            fill(N, {0, 4, 2 * gh1p.imag(), 2 * s.gh2.imag(),
                     -4, 0, z2.imag(), (1 + A) * gh2_1m.imag(),
                     -2 * gh1p.imag(), -z2.imag(), 0, lambda2.imag(),
                     -2 * s.gh2.imag(), -(1 + A) * gh2_1m.imag(), -lambda2.imag(), 0});
            break;
        }
        default:
            throw unclassified_input();
    }
    return assemble_blocks(M, N);
}

Mat8 transition_matrix(CaseId c, const FghDecomposition& d) {
    const GaussianInt g = d.g, h = d.h;
    const GaussianInt gh = g * h;
    const GaussianInt gh2 = gh * h;
    const GaussianInt ngh(norm(gh), 0);
    const GaussianInt ng(norm(g), 0);
    const GaussianInt onePlusI(1, 1), oneMinusI(1, -1), iU(0, 1);

    Mat8 C{};
    auto fill = [&C](std::initializer_list<double> vals) {
        auto it = vals.begin();
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t col = 0; col < 8; ++col) C[r][col] = *it++;
    };
    auto re = [](const GaussianRational& q) { return rat(real_part(q)); };
    auto im = [](const GaussianRational& q) { return rat(imag_part(q)); };

    switch (c) {
        case CaseId::c3:
            fill({1, 0, .5, 0, 0, 0, 0, 0,
                  0, 1, 0, .5, 0, 0, 0, 0,
                  0, 0, .5, 0, 0, 0, 0, 0,
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, 0, 0, 1, 0, .5, 0,
                  0, 0, 0, 0, 0, 1, 0, .5,
                  0, 0, 0, 0, 0, 0, .5, 0,
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        case CaseId::c4:
            fill({1, 0, 0, 0, 0, 0, -.5, 0,
                  0, 1, 0, 0, 0, 0, 0, -.5,
                  0, 0, .5, 0, 0, 0, 0, 0,
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, .5, 0, 1, 0, 0, 0,
                  0, 0, 0, .5, 0, 1, 0, 0,
                  0, 0, 0, 0, 0, 0, .5, 0,
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        case CaseId::c5:
            fill({1, 0, .5, 0, 0, 0, .5, 0,
                  0, 1, 0, .5, 0, 0, 0, 0,
                  0, 0, .5, 0, 0, 0, .5, 0,
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, -.5, 0, 1, 0, .5, 0,
                  0, 0, 0, 0, 0, 1, 0, .5,
                  0, 0, -.5, 0, 0, 0, .5, 0,
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        case CaseId::c6:
            fill({1, 0, .5, 0, 0, 0, .5, 0,
                  0, 1, 0, 0, 0, 0, 0, -.5,
                  0, 0, .5, 0, 0, 0, .5, 0,
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, -.5, 0, 1, 0, .5, 0,
                  0, 0, 0, .5, 0, 1, 0, 0,
                  0, 0, -.5, 0, 0, 0, .5, 0,
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        case CaseId::c12:
            fill({1, 0, 0, 0, 0, 0, 0, 0,
                  0, 1, 0, .5, 0, 0, 0, -.5,
                  0, 0, 1, 0, 0, 0, 0, 0,
                  0, 0, 0, .5, 0, 0, 0, .5,
                  0, 0, 0, 0, 1, 0, 0, 0,
                  0, 0, 0, .5, 0, 1, 0, .5,
                  0, 0, 0, 0, 0, 0, 1, 0,
                  0, 0, 0, -.5, 0, 0, 0, .5});
            return C;
        case CaseId::c7: {
            const GaussianRational c1 = ratio(conj(gh), onePlusI);
            const GaussianRational c2(conj(gh2), 2);
            const GaussianRational c2gh(conj(gh2) * gh, 2);
            fill({1, 0, re(c1), re(c2), 0, 0, -im(c1), -im(c2),
                  0, 1, 0, re(c2), 0, 0, 0, -im(c2),
                  0, 0, .5, re(c2gh), 0, 0, .5, -im(c2gh),
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, im(c1), im(c2), 1, 0, re(c1), re(c2),
                  0, 0, 0, im(c2), 0, 1, 0, re(c2),
                  0, 0, -.5, im(c2gh), 0, 0, .5, re(c2gh),
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        }
        case CaseId::c10:
            fill({1, .5, 0, 0, 0, .5, 0, 0,
                  0, .5, 0, 0, 0, .5, 0, 0,
                  0, 0, .5, 0, 0, 0, -.5, 0,
                  0, 0, 0, .5, 0, 0, 0, .5,
                  0, -.5, 0, 0, 1, .5, 0, 0,
                  0, -.5, 0, 0, 0, .5, 0, 0,
                  0, 0, .5, 0, 0, 0, .5, 0,
                  0, 0, 0, -.5, 0, 0, 0, .5});
            return C;
        case CaseId::c8: {
            const GaussianRational c1(conj(gh), 2);
            const GaussianRational c2(conj(gh) * onePlusI, 2);
            const GaussianRational c3(conj(gh2), 2);
            const GaussianRational c4(ngh * conj(h) * onePlusI, 2);
            fill({1, 0, re(c1), 0, 0, 0, -im(c1), 0,
                  0, 1, re(c2), re(c3), 0, 0, -im(c2), -im(c3),
                  0, 0, .5, re(c4), 0, 0, 0, -im(c4),
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, im(c1), 0, 1, 0, re(c1), 0,
                  0, 0, im(c2), im(c3), 0, 1, re(c2), re(c3),
                  0, 0, 0, im(c4), 0, 0, .5, re(c4),
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        }
        case CaseId::c9: {
            const GaussianRational c1(iU * conj(gh), 2);
            const GaussianRational c2(iU * conj(gh2), 2);
            const GaussianRational c3(ng * h * conj(h) * conj(h), 2);
            fill({1, 0, re(c1), re(c2), 0, 0, -im(c1), -im(c2),
                  0, 1, 0, re(c2), 0, 0, 0, -im(c2),
                  0, 0, .5, re(c3), 0, 0, 0, -im(c3),
                  0, 0, 0, .5, 0, 0, 0, 0,
                  0, 0, im(c1), im(c2), 1, 0, re(c1), re(c2),
                  0, 0, 0, im(c2), 0, 1, 0, re(c2),
                  0, 0, 0, im(c3), 0, 0, .5, re(c3),
                  0, 0, 0, 0, 0, 0, 0, .5});
            return C;
        }
        case CaseId::c1: {
            const GaussianRational c1(onePlusI * conj(gh), 4);
            const GaussianRational c2(conj(gh), 2);
            const GaussianRational c3(conj(gh2), 4);
            const GaussianRational c4(ng * h * conj(h) * conj(h), 4);
            fill({1, .5, re(c1), re(c3), 0, .5, -im(c1), -im(c3),
                  0, .5, re(c2), re(c3), 0, .5, -im(c2), -im(c3),
                  0, 0, .25, re(c4), 0, 0, .25, -im(c4),
                  0, 0, 0, .25, 0, 0, 0, 0,
                  0, -.5, im(c1), im(c3), 1, .5, re(c1), re(c3),
                  0, -.5, im(c2), im(c3), 0, .5, re(c2), re(c3),
                  0, 0, -.25, im(c4), 0, 0, .25, re(c4),
                  0, 0, 0, 0, 0, 0, 0, .25});
            return C;
        }
        case CaseId::c2: {
            const GaussianRational c1(conj(gh) * oneMinusI, 4);
            const GaussianRational c2(conj(gh2), 4);
            const GaussianRational c3(ng * h * conj(h) * conj(h), 4);
            fill({1, .5, re(c1), re(c2), 0, .5, -im(c1), -im(c2),
                  0, .5, re(c1), re(c2), 0, .5, -im(c1), -im(c2),
                  0, 0, .25, re(c3), 0, 0, .25, -im(c3),
                  0, 0, 0, .25, 0, 0, 0, 0,
                  0, -.5, im(c1), im(c2), 1, .5, re(c1), re(c2),
                  0, -.5, im(c1), im(c2), 0, .5, re(c1), re(c2),
                  0, 0, -.25, im(c3), 0, 0, .25, re(c3),
                  0, 0, 0, 0, 0, 0, 0, .25});
            return C;
        }
        default:
            throw std::invalid_argument("transition_matrix: unsupported case");
    }
}

ShapeGram6 project_shape(const IntegralBasis& b, GaussianInt m) {
    std::array<std::array<Complex, 8>, 8> vec;
    for (std::size_t r = 0; r < 8; ++r) vec[r] = embed(b.elements[r], m);

    const auto& j1 = vec[0];  // J(1)
    const auto& ji = vec[4];  // J(i)
    auto inner = [](const std::array<Complex, 8>& x, const std::array<Complex, 8>& y) {
        Complex acc = 0;
        for (std::size_t t = 0; t < 8; ++t) acc += x[t] * std::conj(y[t]);
        return acc;
    };

    const std::array<std::size_t, 6> picked = {1, 2, 3, 5, 6, 7};
    std::array<std::array<Complex, 8>, 6> proj;
    for (std::size_t k = 0; k < 6; ++k) {
        auto v = vec[picked[k]];
        const Complex a = inner(v, j1) / 8.0L;
        const Complex c = inner(v, ji) / 8.0L;
        for (std::size_t t = 0; t < 8; ++t) v[t] -= a * j1[t] + c * ji[t];
        proj[k] = v;
    }

    Mat6 g{};
    long double scale = 1.0L;
    std::array<std::array<Complex, 6>, 6> raw;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t s = 0; s < 6; ++s) {
            raw[r][s] = inner(proj[r], proj[s]);
            scale = std::max(scale, std::abs(raw[r][s].real()));
        }
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t s = 0; s < 6; ++s) {
            if (std::abs(raw[r][s].imag()) > 1e-9L * scale)
                throw std::logic_error("project_shape: non-vanishing imaginary part");
            g[r][s] = static_cast<double>(raw[r][s].real());
        }

    const double det = determinant(g);
    if (!(det > 0.0)) throw degenerate_lattice();
    const double scale6 = std::pow(det, 1.0 / 6.0);
    ShapeGram6 out;
    out.normalization = scale6;
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t s = 0; s < 6; ++s) out.entries[r][s] = g[r][s] / scale6;
    return out;
}

ShapeParams shape_params(const FghDecomposition& d) {
    if (d.h.is_zero() || d.g.is_zero()) throw std::invalid_argument("shape_params: zero g or h");
    ShapeParams p;
    p.lambda1 = std::sqrt(static_cast<double>(norm(d.f)) / static_cast<double>(norm(d.h)));
    p.lambda2 = std::sqrt(static_cast<double>(norm(d.g)));
    return p;
}

bool iden_check(const FghDecomposition& d) {
    const long double nf = static_cast<long double>(norm(d.f));
    const long double ng = static_cast<long double>(norm(d.g));
    const long double nh = static_cast<long double>(norm(d.h));
    const long double am = std::sqrt(static_cast<long double>(norm(d.m)));
    const long double l1 = std::sqrt(nf / nh);
    const long double l2 = std::sqrt(ng);

    const long double habs = std::sqrt(nh);
    const long double q14 = std::pow(am, 0.25L);

    const std::array<std::pair<long double, long double>, 6> identities = {{
        {habs, q14 / (std::pow(l1, 0.25L) * std::sqrt(l2))},
        {std::sqrt(nf * nh), std::sqrt(l1) / l2 * std::sqrt(am)},
        {std::sqrt(ng * nh), std::sqrt(l2) / std::pow(l1, 0.25L) * q14},
        {std::sqrt(ng) * nh, std::sqrt(am) / std::sqrt(l1)},
        {ng * nh, l2 / std::sqrt(l1) * std::sqrt(am)},
        {ng * nh * nh, am / l1},
    }};
    for (const auto& [lhs, rhs] : identities) {
        const long double scale = std::max({1.0L, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > 1e-12L * scale) return false;
    }
    return true;
}

RenormalizedGram renormalized_gram(CaseId c, const FghDecomposition& d) {
    const Gram8 g = gram_closed_form(c, d);
    const Scalars s = scalars(d);
    const double l1 = static_cast<double>(s.lam);
    const double l2 = std::sqrt(static_cast<double>(norm(d.g)));

    RenormalizedGram out;
    const bool type1 = c == CaseId::c3 || c == CaseId::c4 || c == CaseId::c5 ||
                       c == CaseId::c6 || c == CaseId::c11 || c == CaseId::c12;
    out.uniform_scaling = type1;
    if (type1) {
        const double denom = 8.0 * static_cast<double>(s.A);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t col = 0; col < 8; ++col) out.scaled[r][col] = g[r][col] / denom;
        if (c == CaseId::c11)
            out.limit_diag = std::array<double, 4>{0.0, 1.0, std::sqrt(l1) / l2, l1};
    } else {
        const double am = static_cast<double>(s.am);
        const std::array<double, 4> w = {1.0, std::pow(am, -0.25), std::pow(am, -0.5), 1.0 / am};
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t col = 0; col < 8; ++col)
                out.scaled[r][col] = g[r][col] * w[r % 4] * w[col % 4];
        if (c == CaseId::c1)
            out.limit_diag = std::array<double, 4>{8.0, 4.0, 2.0 * l2 / std::sqrt(l1),
                                                   1.0 / (2.0 * l1)};
    }
    return out;
}

SpanRelation basis_span_relation(const IntegralBasis& b1, const IntegralBasis& b2) {
    auto coords = [](const IntegralBasis& b) {
        Mat8 m{};
        for (std::size_t col = 0; col < 8; ++col)
            for (std::size_t j = 0; j < 4; ++j) {
                m[j][col] = rat(real_part(b.elements[col].c[j]));
                m[j + 4][col] = rat(imag_part(b.elements[col].c[j]));
            }
        return m;
    };
    const Mat8 a = coords(b1), bb = coords(b2);
    SpanRelation rel{};
    if (!solve(a, bb, rel.transition))
        throw std::logic_error("basis_span_relation: singular coordinate matrix");
    rel.abs_det = std::abs(determinant(rel.transition));

    auto near_integers = [](const Mat8& t) {
        for (const auto& row : t)
            for (double v : row)
                if (std::abs(v - std::round(v)) > 1e-9) return false;
        return true;
    };
    rel.integral = near_integers(rel.transition);
    Mat8 inv{};
    rel.inverse_integral = solve(bb, a, inv) && near_integers(inv);
    return rel;
}

}  // namespace gshape
