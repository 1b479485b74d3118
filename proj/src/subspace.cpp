#include "homlie/subspace.hpp"

namespace homlie {

namespace {

// RREF with zero rows dropped.
Matrix reduced_basis(const Matrix& m) {
    std::vector<int> pivots;
    Matrix r = rref(m, pivots);
    Matrix b(int(pivots.size()), m.cols(), m.field());
    for (int i = 0; i < int(pivots.size()); ++i) b.set_row(i, r.row(i));
    return b;
}

} // namespace

Subspace Subspace::zero(int ambient, const Field& f) {
    return Subspace(ambient, Matrix(0, ambient, f));
}

Subspace Subspace::full(int ambient, const Field& f) {
    return Subspace(ambient, Matrix::identity(ambient, f));
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient, const Field& f) {
    for (const auto& v : vectors)
        if (int(v.size()) != ambient) throw domain_error("span vector length mismatch");
    return Subspace(ambient, reduced_basis(Matrix::from_rows(vectors, ambient, f)));
}

Subspace Subspace::span(const Matrix& rows_span) {
    return Subspace(rows_span.cols(), reduced_basis(rows_span));
}

void Subspace::check_compatible(const Subspace& o) const {
    if (ambient_ != o.ambient_ || field() != o.field())
        throw domain_error("subspace ambient/field mismatch");
}

Subspace Subspace::sum(const Subspace& o) const {
    check_compatible(o);
    Matrix stacked(dim() + o.dim(), ambient_, field());
    for (int i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
    for (int i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, o.basis_.row(i));
    return Subspace(ambient_, reduced_basis(stacked));
}

// v in A cap B iff v = x^T A = y^T B; pairs (x, y) form the kernel of the
// transposed stacked relation [A; -B]^T.
Subspace Subspace::intersect(const Subspace& o) const {
    check_compatible(o);
    int ra = dim(), rb = o.dim();
    Matrix rel(ra + rb, ambient_, field());
    for (int i = 0; i < ra; ++i) rel.set_row(i, basis_.row(i));
    for (int i = 0; i < rb; ++i) rel.set_row(ra + i, vec_scale(-Scalar::one(field()), o.basis_.row(i)));
    Matrix ker = kernel(rel.transpose());
    std::vector<Vec> vecs;
    for (int i = 0; i < ker.rows(); ++i) {
        Vec v = vec_zero(field(), ambient_);
        for (int r = 0; r < ra; ++r) v = vec_add(v, vec_scale(ker.at(i, r), basis_.row(r)));
        vecs.push_back(v);
    }
    return Subspace::span(vecs, ambient_, field());
}

bool Subspace::contains(const Vec& v) const {
    if (int(v.size()) != ambient_) throw domain_error("containment vector length mismatch");
    // Reduce v against the RREF basis.
    Vec w = v;
    for (int i = 0; i < dim(); ++i) {
        int piv = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!basis_.at(i, j).is_zero()) {
                piv = j; // first nonzero of an RREF row is its pivot (= 1)
                break;
            }
        if (piv < 0) continue;
        if (!w[piv].is_zero()) w = vec_sub(w, vec_scale(w[piv], basis_.row(i)));
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
    check_compatible(o);
    for (int i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

} // namespace homlie
