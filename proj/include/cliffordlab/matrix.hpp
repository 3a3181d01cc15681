#pragma once

#include "cliffordlab/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cliff {

// Dense row-major matrix over S. Products skip zero entries, which matters
// because almost every operator here is a signed permutation or close to it.
template <class S>
class Matrix {
public:
    using Traits = ScalarTraits<S>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const S& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
    Matrix operator-() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.multiply(b); }
    Matrix multiply(const Matrix& b) const;
    std::vector<S> apply(const std::vector<S>& v) const;

    // conjugate transpose
    Matrix adjoint() const;
    // entrywise complex conjugate; equals c T c for the real-structure c
    Matrix conj() const;
    Matrix transpose() const;

    bool is_zero(double tol) const;
    double max_abs() const;
    std::size_t nonzeros(double tol) const;

    std::vector<S> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<S>& v);
    Matrix columns(const std::vector<std::size_t>& idx) const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S> Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) { return a * b - b * a; }
template <class S> Matrix<S> anticommutator(const Matrix<S>& a, const Matrix<S>& b) { return a * b + b * a; }

template <class S> Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b);
template <class S> Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b);

// Linear algebra over the field (exact) or via SVD with absolute singular
// value threshold tol (float). Bases are returned as matrix columns.
std::size_t rank(const Matrix<ExactScalar>& a, double tol);
std::size_t rank(const Matrix<FloatScalar>& a, double tol);
Matrix<ExactScalar> nullspace(const Matrix<ExactScalar>& a, double tol);
Matrix<FloatScalar> nullspace(const Matrix<FloatScalar>& a, double tol);
Matrix<ExactScalar> column_basis(const Matrix<ExactScalar>& a, double tol);
Matrix<FloatScalar> column_basis(const Matrix<FloatScalar>& a, double tol);
std::optional<Matrix<ExactScalar>> inverse(const Matrix<ExactScalar>& a, double tol);
std::optional<Matrix<FloatScalar>> inverse(const Matrix<FloatScalar>& a, double tol);

// true when every column of vecs lies in the span of the columns of basis
template <class S> bool in_span(const Matrix<S>& basis, const Matrix<S>& vecs, double tol);
// true when the column spans agree
template <class S> bool same_span(const Matrix<S>& a, const Matrix<S>& b, double tol);

Matrix<FloatScalar> to_float(const Matrix<ExactScalar>& m);

}  // namespace cliff
