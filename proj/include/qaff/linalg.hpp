#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qaff/scalar.hpp"

namespace qaff {

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_from_dense(const std::vector<Scalar>& d);
std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim);
SparseVec unit_vector(std::size_t i);
Scalar sparse_get(const SparseVec& v, std::size_t i);
SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y);  // x + a*y
SparseVec sparse_scale(const SparseVec& x, const Scalar& a);

// Dense scratch accumulator for building sparse vectors.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : val_(dim), used_(dim, 0) {}
    void add(std::size_t i, const Scalar& v);
    void add_scaled(const SparseVec& v, const Scalar& a);
    SparseVec take();

private:
    std::vector<Scalar> val_;
    std::vector<char> used_;
    std::vector<std::size_t> touched_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<Scalar>& d);
    static Matrix from_rows(std::size_t cols, std::vector<SparseVec> rows);
    static Matrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& row(std::size_t i) const { return data_[i]; }
    SparseVec& row(std::size_t i) { return data_[i]; }

    Scalar get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void add_to(std::size_t i, std::size_t j, const Scalar& v);
    std::size_t nonzeros() const;

    Matrix transpose() const;
    SparseVec apply(const SparseVec& v) const;      // M * v (column vector)
    SparseVec apply_row(const SparseVec& v) const;  // v * M (row vector)
    SparseVec column(std::size_t j) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_zero() const;
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;
    bool is_diagonal() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix specialize_matrix(const Matrix& m, const Rational& t0);

// Incrementally maintained reduced row echelon form of a subspace of K^dim.
// Rows are normalized with pivot entry 1 and zero in every other pivot column.
class Echelon {
public:
    explicit Echelon(std::size_t dim = 0) : dim_(dim), pivot_row_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == dim_; }

    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // Returns true when v was independent of the current span.
    bool insert(const SparseVec& v);

    // Rows sorted by pivot column.
    std::vector<SparseVec> basis() const;
    std::vector<std::size_t> pivots() const;
    std::vector<std::size_t> free_columns() const;
    bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }
    // Coordinates of v (assumed in the span) in the basis() order.
    std::vector<Scalar> coordinates(const SparseVec& v) const;

    friend bool operator==(const Echelon& a, const Echelon& b);

private:
    std::size_t dim_;
    std::vector<SparseVec> rows_;
    std::vector<std::size_t> pivot_of_;
    std::vector<long> pivot_row_;
};

Echelon span_of(std::size_t dim, const std::vector<SparseVec>& vs);
std::size_t rank(const Matrix& m);
// Basis of {x : M x = 0}.
std::vector<SparseVec> kernel(const Matrix& m);
std::vector<SparseVec> intersect(const Echelon& a, const Echelon& b);
// Inverse of a square matrix; throws MathError if singular.
Matrix inverse(const Matrix& m);

}  // namespace qaff
