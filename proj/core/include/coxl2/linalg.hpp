#pragma once

#include <coxl2/rational.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace coxl2 {

using Vector = std::vector<Rational>;

/** Dense row-major matrix over Q. Subspaces are passed around as matrices
 *  whose columns form a basis. */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    std::vector<Vector> columns() const;
    Matrix transpose() const;
    Matrix hcat(const Matrix& o) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/** Reduced row echelon form in place; returns pivot columns. */
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/** Columns span {x : A x = 0}. */
Matrix kernel(const Matrix& a);
/** A maximal independent subset of the columns, in order. */
Matrix column_basis(const Matrix& a);
/** Solve A x = b for square invertible A. */
Vector solve(const Matrix& a, const Vector& b);

/** Diagonal inner products <x,y> = sum w_i x_i y_i. */
Rational weighted_dot(const Vector& x, const Vector& y, const Vector& weights);
/** Orthogonal projection of v onto the column span of basis, with respect to the weights. */
Vector weighted_projection(const Matrix& basis, const Vector& weights, const Vector& v);
/** Orthogonal complement of the column span within Q^n. */
Matrix weighted_complement(const Matrix& basis, const Vector& weights);
Matrix intersect_spans(const Matrix& a, const Matrix& b);
Matrix sum_spans(const Matrix& a, const Matrix& b);
/** True iff every column of a lies in span(b). */
bool span_contains(const Matrix& b, const Matrix& a);

/** Rank of a sparse matrix given as rows of (column -> value). */
std::size_t sparse_rank(std::vector<std::map<std::size_t, Rational>> rows);

}  // namespace coxl2
