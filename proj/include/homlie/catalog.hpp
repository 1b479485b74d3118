#pragma once

#include "homlie/algebra.hpp"

namespace homlie {
namespace catalog {

// Basis order follows each source display; code indices are 0-based, so a
// display basis {x_1,...,x_m} lands on e_0,...,e_{m-1}.

// sl_2 with its classical bracket [H,E] = -2E, [H,F] = 2F, [E,F] = -H and a
// caller-supplied twist matrix (the general 6-parameter family is verified,
// never assumed, to give a Hom-Lie algebra).
HomAlgebra sl2(const Matrix& alpha);

// q-deformed sl_2: [x1,x2] = -2q x2, [x1,x3] = 2 x3, [x2,x3] = -(1+q)/2 x1,
// alpha = diag(q, q^2, q).
HomAlgebra q_sl2(const Scalar& q);

// 3-dimensional family: [x1,x2] = a x1 + b x3, [x1,x3] = c x2,
// [x2,x3] = d x1 + 2a x3, alpha = diag(1, 2, 2).
HomAlgebra example4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

// Twisted Heisenberg: [x1,x2] = (a11 a22 - a12 a21) x3 with the
// 6-parameter twist family.
HomAlgebra twisted_heisenberg(const Scalar& a11, const Scalar& a12, const Scalar& a21,
                              const Scalar& a22, const Scalar& a31, const Scalar& a32);

// Nilpotent sub-family of the twisted Heisenberg (a12 = 0 and corner a11 a22).
HomAlgebra twisted_heisenberg_nilpotent(const Scalar& a11, const Scalar& a21, const Scalar& a22,
                                        const Scalar& a31, const Scalar& a32);

// 4-dimensional filiform Lie algebra [x1,x4] = x3, [x1,x3] = x2 in its
// source basis order, alpha = id.
HomAlgebra example32_lie();

// Its two verified bracket-morphism families.
Matrix example32_morphism1(const Scalar& a12, const Scalar& a13, const Scalar& a14,
                           const Scalar& a42, const Scalar& a43, const Scalar& a44);
Matrix example32_morphism2(const Scalar& a11, const Scalar& a12, const Scalar& a13,
                           const Scalar& a14, const Scalar& a33, const Scalar& a42,
                           const Scalar& a43);

} // namespace catalog
} // namespace homlie
