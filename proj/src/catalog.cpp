#include "homlie/catalog.hpp"

namespace homlie {
namespace catalog {

namespace {

Vec coeffs(const Field& f, int n, std::initializer_list<std::pair<int, Scalar>> entries) {
    Vec v = vec_zero(f, n);
    for (const auto& [k, c] : entries) v[k] = c;
    return v;
}

} // namespace

HomAlgebra sl2(const Matrix& alpha) {
    Field f = alpha.field();
    HomAlgebra g = make_algebra(3, f);
    Scalar one = Scalar::one(f), two = Scalar::from_int(f, 2);
    // basis (H, E, F)
    g.bracket.set(0, 1, coeffs(f, 3, {{1, -two}}));
    g.bracket.set(0, 2, coeffs(f, 3, {{2, two}}));
    g.bracket.set(1, 2, coeffs(f, 3, {{0, -one}}));
    g.labels = {"H", "E", "F"};
    return with_alpha(g, alpha);
}

HomAlgebra q_sl2(const Scalar& q) {
    Field f = q.field();
    HomAlgebra g = make_algebra(3, f);
    Scalar two = Scalar::from_int(f, 2);
    Scalar half = Scalar::one(f) / two;
    g.bracket.set(0, 1, coeffs(f, 3, {{1, -two * q}}));
    g.bracket.set(0, 2, coeffs(f, 3, {{2, two}}));
    g.bracket.set(1, 2, coeffs(f, 3, {{0, -half * (Scalar::one(f) + q)}}));
    Matrix a(3, 3, f);
    a.at(0, 0) = q;
    a.at(1, 1) = q * q;
    a.at(2, 2) = q;
    return with_alpha(g, a);
}

HomAlgebra example4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Field f = a.field();
    HomAlgebra g = make_algebra(3, f);
    Scalar two = Scalar::from_int(f, 2);
    g.bracket.set(0, 1, coeffs(f, 3, {{0, a}, {2, b}}));
    g.bracket.set(0, 2, coeffs(f, 3, {{1, c}}));
    g.bracket.set(1, 2, coeffs(f, 3, {{0, d}, {2, two * a}}));
    Matrix al(3, 3, f);
    al.at(0, 0) = Scalar::one(f);
    al.at(1, 1) = two;
    al.at(2, 2) = two;
    return with_alpha(g, al);
}

HomAlgebra twisted_heisenberg(const Scalar& a11, const Scalar& a12, const Scalar& a21,
                              const Scalar& a22, const Scalar& a31, const Scalar& a32) {
    Field f = a11.field();
    Scalar det = a11 * a22 - a12 * a21;
    HomAlgebra g = make_algebra(3, f);
    g.bracket.set(0, 1, coeffs(f, 3, {{2, det}}));
    Matrix a(3, 3, f);
    a.at(0, 0) = a11;
    a.at(0, 1) = a12;
    a.at(1, 0) = a21;
    a.at(1, 1) = a22;
    a.at(2, 0) = a31;
    a.at(2, 1) = a32;
    a.at(2, 2) = det;
    return with_alpha(g, a);
}

HomAlgebra twisted_heisenberg_nilpotent(const Scalar& a11, const Scalar& a21, const Scalar& a22,
                                        const Scalar& a31, const Scalar& a32) {
    return twisted_heisenberg(a11, Scalar::zero(a11.field()), a21, a22, a31, a32);
}

HomAlgebra example32_lie() {
    Field f = Field::rationals();
    HomAlgebra g = make_algebra(4, f);
    // [x1, x4] = x3, [x1, x3] = x2 in display order (x1..x4 -> e0..e3)
    g.bracket.set(0, 3, coeffs(f, 4, {{2, Scalar::one(f)}}));
    g.bracket.set(0, 2, coeffs(f, 4, {{1, Scalar::one(f)}}));
    g.labels = {"x1", "x2", "x3", "x4"};
    return g;
}

Matrix example32_morphism1(const Scalar& a12, const Scalar& a13, const Scalar& a14,
                           const Scalar& a42, const Scalar& a43, const Scalar& a44) {
    Field f = a12.field();
    Matrix m(4, 4, f);
    // alpha(x1) = a12 x2 + a13 x3 + a14 x4; alpha(x2) = alpha(x3) = 0;
    // alpha(x4) = a42 x2 + a43 x3 + a44 x4
    m.at(1, 0) = a12;
    m.at(2, 0) = a13;
    m.at(3, 0) = a14;
    m.at(1, 3) = a42;
    m.at(2, 3) = a43;
    m.at(3, 3) = a44;
    return m;
}

Matrix example32_morphism2(const Scalar& a11, const Scalar& a12, const Scalar& a13,
                           const Scalar& a14, const Scalar& a33, const Scalar& a42,
                           const Scalar& a43) {
    if (a11.is_zero() || a33.is_zero())
        throw domain_error("automorphism family requires a11, a33 nonzero");
    Field f = a11.field();
    Matrix m(4, 4, f);
    m.at(0, 0) = a11;
    m.at(1, 0) = a12;
    m.at(2, 0) = a13;
    m.at(3, 0) = a14;
    m.at(1, 1) = a11 * a33;
    m.at(1, 2) = a11 * a43;
    m.at(2, 2) = a33;
    m.at(1, 3) = a42;
    m.at(2, 3) = a43;
    m.at(3, 3) = a33 / a11;
    return m;
}

} // namespace catalog
} // namespace homlie
