#pragma once

#include "homlie/matrix.hpp"

namespace homlie {

// Subspace of K^n, stored as an RREF basis matrix with zero rows dropped.
// Two subspaces over the same field are equal iff their bases are identical.
class Subspace {
  public:
    static Subspace zero(int ambient, const Field& f);
    static Subspace full(int ambient, const Field& f);
    static Subspace span(const std::vector<Vec>& vectors, int ambient, const Field& f);
    static Subspace span(const Matrix& rows_span);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Field& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    void check_compatible(const Subspace& o) const;
    int ambient_;
    Matrix basis_;
};

} // namespace homlie
