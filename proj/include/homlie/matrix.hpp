#pragma once

#include <optional>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

using Vec = std::vector<Scalar>;

Vec vec_zero(const Field& f, int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Dense row-major matrix over one field. Small sizes only; everything exact.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(int rows, int cols, const Field& f);

    static Matrix identity(int n, const Field& f);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);
    void set_col(int j, const Vec& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const; // matrix * column vector
    Matrix transpose() const;
    Matrix pow(int e) const; // square matrices, e >= 0

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;
    bool is_lower_triangular() const;

  private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;
};

// Unique reduced row-echelon form; row space preserved.
Matrix rref(const Matrix& m);
Matrix rref(const Matrix& m, std::vector<int>& pivots);

int rank(const Matrix& m);

// Rows span the null space {x : m x = 0}; returned in RREF.
Matrix kernel(const Matrix& m);

// One exact solution of m x = b, if consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Inverse of a square matrix; singular input raises singular_matrix_error
// carrying the rank.
Matrix inverse(const Matrix& m);

Scalar det(const Matrix& m);

} // namespace homlie
