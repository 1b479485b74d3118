#pragma once

#include <string>
#include <vector>

#include "homlie/subspace.hpp"

namespace homlie {

// Skew bracket structure constants: c_{ij} for 0 <= i < j < n, with
// [x_i, x_j] = sum_k c_{ij}^k x_k. [x_j, x_i] is derived as -c_{ij} and
// [x_i, x_i] = 0, so skew-symmetry holds structurally.
class BracketTable {
  public:
    BracketTable() : n_(0), field_(Field::rationals()) {}
    BracketTable(int n, const Field& f);

    int dim() const { return n_; }
    const Field& field() const { return field_; }

    void set(int i, int j, const Vec& coeffs); // requires i < j
    // [x_i, x_j] for any index pair, sign handled.
    Vec pair(int i, int j) const;

    bool operator==(const BracketTable& o) const;
    bool operator!=(const BracketTable& o) const { return !(*this == o); }

  private:
    int idx(int i, int j) const { return i * n_ + j; }
    int n_;
    Field field_;
    std::vector<Vec> table_; // only slots with i < j are used
};

// A Hom-Lie algebra candidate: dimension, bracket table and twist map.
// Column j of alpha holds the coordinates of alpha(x_j).
struct HomAlgebra {
    int dim = 0;
    BracketTable bracket;
    Matrix alpha;
    std::vector<std::string> labels; // optional, size dim or empty

    const Field& field() const { return bracket.field(); }
    Vec alpha_of(int j) const { return alpha.col(j); }
    Vec alpha_apply(const Vec& v) const { return alpha.apply(v); }

    bool operator==(const HomAlgebra& o) const {
        return dim == o.dim && bracket == o.bracket && alpha == o.alpha;
    }
};

HomAlgebra make_algebra(int dim, const Field& f); // zero bracket, identity twist
HomAlgebra with_alpha(const HomAlgebra& g, const Matrix& alpha);

// Bilinear extension of the bracket table.
Vec bracket_eval(const HomAlgebra& g, const Vec& u, const Vec& v);

// Cyclic sum [alpha(x_i),[x_j,x_k]] + [alpha(x_k),[x_i,x_j]] + [alpha(x_j),[x_k,x_i]].
Vec hom_jacobi_defect(const HomAlgebra& g, int i, int j, int k);
// True iff the defect vanishes on every increasing basis triple (sufficient
// by trilinearity and alternation of the cyclic sum).
bool check_hom_jacobi(const HomAlgebra& g);

// alpha([x,y]) = [alpha(x), alpha(y)] on all basis pairs.
bool check_multiplicative(const HomAlgebra& g);

// Untwisted Jacobi identity of the bracket alone (g's alpha is ignored).
bool is_lie(const HomAlgebra& g);

// f maps g -> h; weak morphism intertwines brackets, full morphism also
// intertwines the twist maps.
bool is_weak_morphism(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h);
bool is_morphism(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h);

// Graph criterion: f is a morphism iff {(x, f(x))} is closed under the
// direct-sum bracket and stable under the direct-sum twist map.
bool check_morphism_via_graph(const Matrix& f, const HomAlgebra& g, const HomAlgebra& h);

HomAlgebra direct_sum(const HomAlgebra& g, const HomAlgebra& h);

// {z : [x, z] = 0 for all x}.
Subspace center(const HomAlgebra& g);

// Pullback along an invertible matrix: bracket f^{-1}([f u, f v]),
// twist f^{-1} alpha f.
HomAlgebra conjugate(const HomAlgebra& g, const Matrix& f);

} // namespace homlie
