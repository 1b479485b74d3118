#include "homlie/matrix.hpp"

#include <utility>

namespace homlie {

Vec vec_zero(const Field& f, int n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw domain_error("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), e_(std::size_t(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, const Field& f) {
    Matrix m(int(rows.size()), cols, f);
    for (int i = 0; i < int(rows.size()); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(int i) const {
    Vec v(cols_, Scalar::zero(field_));
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(int j) const {
    Vec v(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(int i, const Vec& v) {
    if (int(v.size()) != cols_) throw domain_error("row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(int j, const Vec& v) {
    if (int(v.size()) != rows_) throw domain_error("column length mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    Matrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    Matrix m(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw domain_error("matrix apply shape mismatch");
    Vec r = vec_zero(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::pow(int e) const {
    if (rows_ != cols_) throw domain_error("pow of non-square matrix");
    if (e < 0) throw domain_error("negative matrix power");
    Matrix acc = identity(rows_, field_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, field_);
}

bool Matrix::is_lower_triangular() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

Matrix rref(const Matrix& m, std::vector<int>& pivots) {
    Matrix a = m;
    pivots.clear();
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return a;
}

Matrix rref(const Matrix& m) {
    std::vector<int> pivots;
    return rref(m, pivots);
}

int rank(const Matrix& m) {
    std::vector<int> pivots;
    rref(m, pivots);
    return int(pivots.size());
}

Matrix kernel(const Matrix& m) {
    std::vector<int> pivots;
    Matrix r = rref(m, pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(m.field(), m.cols());
        v[c] = Scalar::one(m.field());
        for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -r.at(i, c);
        basis.push_back(v);
    }
    return rref(Matrix::from_rows(basis, m.cols(), m.field()));
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (int(b.size()) != m.rows()) throw domain_error("solve shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots;
    Matrix r = rref(aug, pivots);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt; // inconsistent
    Vec x = vec_zero(m.field(), m.cols());
    for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = r.at(i, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n, m.field());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    std::vector<int> pivots;
    Matrix r = rref(aug, pivots);
    int rk = 0;
    for (int c : pivots)
        if (c < n) ++rk;
    if (rk < n) throw singular_matrix_error("matrix not invertible", rk);
    Matrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw domain_error("det of non-square matrix");
    Matrix a = m;
    int n = m.rows();
    Scalar d = Scalar::one(m.field());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return Scalar::zero(m.field());
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar inv = a.at(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c) * inv;
            for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

} // namespace homlie
