#pragma once

// Exact rational linear algebra: sparse vectors and matrices over Q,
// tensor index bookkeeping, and row reduction.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncfrob/errors.hpp"

namespace ncfrob {

/// Arbitrary-precision rational, always kept in lowest terms.
using Scalar = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Scalar& x);

/// Parses "p", "p/q" or "-p/q"; canonicalizes. Throws InputError.
Scalar parse_scalar(std::string_view text);

/// Sparse vector of fixed dimension. Zero entries are never stored and
/// iteration is in ascending index order.
class Vector {
public:
    using Storage = std::map<std::size_t, Scalar>;

    Vector() = default;
    explicit Vector(std::size_t dim) : dim_(dim) {}

    static Vector unit_vector(std::size_t dim, std::size_t i, const Scalar& value = 1);
    static Vector from_dense(std::span<const Scalar> values);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Scalar operator[](std::size_t i) const;
    void set(std::size_t i, const Scalar& value);
    void add(std::size_t i, const Scalar& value);
    /// this += factor * other
    void add_scaled(const Vector& other, const Scalar& factor);

    Storage::const_iterator begin() const { return entries_.begin(); }
    Storage::const_iterator end() const { return entries_.end(); }

    Vector& operator+=(const Vector& other);
    Vector& operator-=(const Vector& other);
    Vector& operator*=(const Scalar& factor);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const Scalar& s) { return a *= s; }
    friend Vector operator*(const Scalar& s, Vector a) { return a *= s; }
    friend bool operator==(const Vector& a, const Vector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    void check_index(std::size_t i) const;

    std::size_t dim_ = 0;
    Storage entries_;
};

Scalar dot(const Vector& a, const Vector& b);

/// Sparse matrix stored by columns; column c is the image of the c-th
/// basis vector when the matrix is read as a linear map.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, std::vector<Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nnz() const;
    bool is_zero() const;

    Scalar operator()(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& value);
    void add(std::size_t r, std::size_t c, const Scalar& value);

    const Vector& column(std::size_t c) const;
    void set_column(std::size_t c, Vector v);
    Vector row(std::size_t r) const;
    std::vector<Vector> row_vectors() const;

    Matrix transpose() const;

    friend Vector operator*(const Matrix& a, const Vector& x);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t rows_ = 0;
    std::vector<Vector> columns_;
};

/// Row-major flattening of multi-indices; the leftmost factor is most
/// significant.
class TensorIndex {
public:
    explicit TensorIndex(std::vector<std::size_t> dims);

    std::size_t size() const { return size_; }
    std::span<const std::size_t> dims() const { return dims_; }

    std::size_t flatten(std::span<const std::size_t> multi) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

private:
    std::vector<std::size_t> dims_;
    std::size_t size_ = 1;
};

/// Applies `map` to one factor of a tensor with factor sizes `dims`. The
/// result has the same factors with dims[factor] replaced by map.rows().
/// Adjacent factors can be treated as one by merging their sizes.
Vector apply_to_factor(const Vector& t, std::span<const std::size_t> dims, std::size_t factor,
                       const Matrix& map);

/// Incrementally maintained reduced row-echelon form of an augmented or
/// homogeneous linear system. Pivots are always the leftmost nonzero
/// column of a row, so the final form is the unique RREF.
class RowReducer {
public:
    /// `unknowns` columns; one extra column holds the right-hand side.
    explicit RowReducer(std::size_t unknowns);

    void add_equation(const Vector& coefficients, const Scalar& rhs = 0);

    std::size_t unknowns() const { return unknowns_; }
    std::size_t rank() const;
    bool consistent() const { return consistent_; }
    bool pivot_at(std::size_t column) const { return pivots_.contains(column); }

    /// Solution with all free variables zero, or nullopt if inconsistent.
    std::optional<Vector> particular_solution() const;
    /// Null-space basis of the homogeneous part; one vector per free column,
    /// in ascending free-column order.
    std::vector<Vector> kernel() const;

private:
    using Row = std::map<std::size_t, Scalar>;

    std::size_t unknowns_;
    std::map<std::size_t, Row> pivots_;
    bool consistent_ = true;
};

/// Some x with a*x == b, free variables zeroed; nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
std::vector<Vector> kernel_basis(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t rank(std::span<const Vector> vectors);
bool is_invertible(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace ncfrob
