#pragma once

#include <map>
#include <optional>

#include "homlie/algebra.hpp"

namespace homlie {

// Alternating p-linear map with values in the algebra, stored on strictly
// increasing index tuples. Evaluation on arbitrary tuples extends by sign;
// repeated arguments give zero.
class Cochain {
  public:
    Cochain() : arity_(1), dim_(0), field_(Field::rationals()) {}
    Cochain(int arity, int dim, const Field& f, bool equivariance_required = false);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    const Field& field() const { return field_; }
    bool equivariance_required() const { return equivariance_required_; }
    void set_equivariance_required(bool b) { equivariance_required_ = b; }

    void set(const std::vector<int>& increasing_tuple, const Vec& value);
    // Basis evaluation on any tuple (sign-extended, repeats -> 0).
    Vec eval_basis(const std::vector<int>& tuple) const;
    // Full multilinear evaluation.
    Vec eval(const std::vector<Vec>& args) const;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const Cochain& o) const;
    bool operator!=(const Cochain& o) const { return !(*this == o); }

    // Tuples where the value is nonzero, in lexicographic order.
    std::vector<std::vector<int>> support() const;

  private:
    int arity_, dim_;
    Field field_;
    bool equivariance_required_ = false;
    std::map<std::vector<int>, Vec> values_; // increasing tuples only
};

std::vector<std::vector<int>> increasing_tuples(int dim, int arity);

// The bracket of g as a 2-cochain.
Cochain bracket_cochain(const HomAlgebra& g);

// alpha o phi = phi o alpha^{tensor p} on all increasing tuples.
bool check_equivariance(const HomAlgebra& g, const Cochain& phi);

// Hom-Chevalley-Eilenberg coboundary with the standard alternating signs:
//   sum_k (-1)^k [alpha^{p-1}(x_k), phi(..hat k..)]
// + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], alpha(rest)).
Cochain coboundary(const HomAlgebra& g, const Cochain& phi);

// Gerstenhaber circle of two 2-cochains with respect to a twist matrix:
// phi1(phi2(x,y), a z) + phi1(phi2(z,x), a y) + phi1(phi2(y,z), a x).
Cochain circle(const Matrix& alpha, const Cochain& phi1, const Cochain& phi2);

// delta^2 psi = mu o psi + psi o mu, where mu is g's bracket.
Cochain delta2_circle_form(const HomAlgebra& g, const Cochain& psi);

enum class DeltaKind { literal, circle2 };

// delta^p assembled as a matrix on cochain coordinates
// ((increasing p-tuple, coordinate) pairs, tuples lexicographic).
Matrix delta_matrix(const HomAlgebra& g, int p, DeltaKind kind = DeltaKind::literal);

struct CohomologyReport {
    int p = 0;
    int cochain_space_dim = 0;
    int cocycle_dim = 0;    // dim Z^p
    int coboundary_dim = 0; // dim B^p (0 for p = 1; no delta^0)
    bool dd_zero = true;    // delta^p o delta^{p-1} == 0 (vacuous for p = 1)
    bool image_in_restricted_space = true; // only meaningful when equivariant
    std::optional<int> cohomology_dim;     // absent when dd_zero fails
};

// p in {1,2,3}; equivariant restricts the cochain spaces to
// alpha-equivariant maps. kind selects the delta^2 route where applicable.
CohomologyReport cohomology_report(const HomAlgebra& g, int p, bool equivariant = false,
                                   DeltaKind kind = DeltaKind::literal);

int cocycle_space_dim(const HomAlgebra& g, int p, bool equivariant = false,
                      DeltaKind kind = DeltaKind::literal);
int coboundary_space_dim(const HomAlgebra& g, int p, bool equivariant = false,
                         DeltaKind kind = DeltaKind::literal);
// Refused (domain_error) when the empirical delta o delta = 0 check fails.
int cohomology_dim(const HomAlgebra& g, int p, bool equivariant = false,
                   DeltaKind kind = DeltaKind::literal);

// A basis of Z^p as cochains.
std::vector<Cochain> cocycle_basis(const HomAlgebra& g, int p, bool equivariant = false,
                                   DeltaKind kind = DeltaKind::literal);

} // namespace homlie
