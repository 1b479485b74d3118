#pragma once

#include "homlie/algebra.hpp"

namespace homlie {

// [x,y]_alpha = [alpha(x), alpha(y)], twist = alpha. Requires the bracket of
// g to satisfy the plain Jacobi identity and alpha to be a bracket morphism.
HomAlgebra yau_twist(const HomAlgebra& g, const Matrix& alpha);

// bracket = beta o [.,.], twist = beta * alpha. Requires beta to be a weak
// morphism of g.
HomAlgebra beta_twist(const HomAlgebra& g, const Matrix& beta);

// bracket = alpha^n o [.,.], twist = alpha^{n+1}. Requires g multiplicative.
HomAlgebra nth_derived(const HomAlgebra& g, int n);

// bracket = alpha^{-1} o [.,.], twist = id. Requires alpha invertible and
// multiplicative; the result satisfies the plain Jacobi identity.
HomAlgebra untwist(const HomAlgebra& g);

} // namespace homlie
