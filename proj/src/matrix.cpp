#include "cliffordlab/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cliff {

namespace {

bool exactly_zero(const ExactScalar& x) { return x.is_zero(); }
bool exactly_zero(const FloatScalar& x) { return x == FloatScalar(0.0, 0.0); }

using EigenMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

EigenMat to_eigen(const Matrix<FloatScalar>& m) {
    EigenMat e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

Matrix<FloatScalar> from_eigen(const EigenMat& e) {
    Matrix<FloatScalar> m(e.rows(), e.cols());
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix<ExactScalar>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        // prefer rational pivots; they keep the fill-in cheap
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            if (best == m.rows()) best = i;
            if (m(i, c).is_rational()) { best = i; break; }
        }
        if (best == m.rows()) continue;
        p = best;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        ExactScalar inv = *m(r, c).try_inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) nz.push_back(j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            ExactScalar f = -m(i, c);
            for (std::size_t j : nz) m(i, j).add_product(f, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

template <class S>
Matrix<S> Matrix<S>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

template <class S>
Matrix<S>& Matrix<S>::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!exactly_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
}

template <class S>
Matrix<S>& Matrix<S>::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!exactly_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
}

template <class S>
Matrix<S>& Matrix<S>::operator*=(const S& s) {
    for (auto& x : data_)
        if (!exactly_zero(x)) x *= s;
    return *this;
}

template <class S>
Matrix<S> Matrix<S>::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_)
        if (!exactly_zero(x)) x = -x;
    return r;
}

template <class S>
Matrix<S> Matrix<S>::multiply(const Matrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    std::vector<std::vector<std::size_t>> brow(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!exactly_zero(b(k, j))) brow[k].push_back(j);
    Matrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const S& aik = (*this)(i, k);
            if (exactly_zero(aik)) continue;
            for (std::size_t j : brow[k]) Traits::add_product(c(i, j), aik, b(k, j));
        }
    return c;
}

template <class S>
std::vector<S> Matrix<S>::apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<S> out(rows_, S(0));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (exactly_zero(v[j])) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!exactly_zero((*this)(i, j))) Traits::add_product(out[i], (*this)(i, j), v[j]);
    }
    return out;
}

template <class S>
Matrix<S> Matrix<S>::adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!exactly_zero((*this)(i, j))) r(j, i) = Traits::conj((*this)(i, j));
    return r;
}

template <class S>
Matrix<S> Matrix<S>::conj() const {
    Matrix r = *this;
    for (auto& x : r.data_)
        if (!exactly_zero(x)) x = Traits::conj(x);
    return r;
}

template <class S>
Matrix<S> Matrix<S>::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

template <class S>
bool Matrix<S>::is_zero(double tol) const {
    for (const auto& x : data_)
        if (!Traits::is_zero(x, tol)) return false;
    return true;
}

template <class S>
double Matrix<S>::max_abs() const {
    double m = 0.0;
    for (const auto& x : data_)
        if (!exactly_zero(x)) m = std::max(m, Traits::abs(x));
    return m;
}

template <class S>
std::size_t Matrix<S>::nonzeros(double tol) const {
    std::size_t k = 0;
    for (const auto& x : data_)
        if (!Traits::is_zero(x, tol)) ++k;
    return k;
}

template <class S>
std::vector<S> Matrix<S>::column(std::size_t j) const {
    std::vector<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <class S>
void Matrix<S>::set_column(std::size_t j, const std::vector<S>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

template <class S>
Matrix<S> Matrix<S>::columns(const std::vector<std::size_t>& idx) const {
    Matrix r(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t i = 0; i < rows_; ++i) r(i, k) = (*this)(i, idx[k]);
    return r;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<S> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix<S> r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

// exact field

std::size_t rank(const Matrix<ExactScalar>& a, double) {
    Matrix<ExactScalar> m = a;
    return rref(m).size();
}

Matrix<ExactScalar> nullspace(const Matrix<ExactScalar>& a, double) {
    Matrix<ExactScalar> m = a;
    auto piv = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<ExactScalar> ns(a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        ns(f, k) = ExactScalar(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (!m(r, f).is_zero()) ns(piv[r], k) = -m(r, f);
    }
    return ns;
}

Matrix<ExactScalar> column_basis(const Matrix<ExactScalar>& a, double) {
    Matrix<ExactScalar> m = a;
    return a.columns(rref(m));
}

std::optional<Matrix<ExactScalar>> inverse(const Matrix<ExactScalar>& a, double) {
    if (a.rows() != a.cols()) return std::nullopt;
    std::size_t n = a.rows();
    Matrix<ExactScalar> aug = hstack(a, Matrix<ExactScalar>::identity(n));
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<ExactScalar> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// float backend

std::size_t rank(const Matrix<FloatScalar>& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<EigenMat> svd(to_eigen(a));
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > tol) ++r;
    return r;
}

Matrix<FloatScalar> nullspace(const Matrix<FloatScalar>& a, double tol) {
    if (a.rows() == 0) return Matrix<FloatScalar>::identity(a.cols());
    Eigen::JacobiSVD<EigenMat> svd(to_eigen(a), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol) ++r;
    const EigenMat& v = svd.matrixV();
    return from_eigen(v.rightCols(v.cols() - r));
}

Matrix<FloatScalar> column_basis(const Matrix<FloatScalar>& a, double tol) {
    if (a.cols() == 0) return Matrix<FloatScalar>(a.rows(), 0);
    Eigen::JacobiSVD<EigenMat> svd(to_eigen(a), Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > tol) ++r;
    return from_eigen(svd.matrixU().leftCols(r));
}

std::optional<Matrix<FloatScalar>> inverse(const Matrix<FloatScalar>& a, double tol) {
    if (a.rows() != a.cols()) return std::nullopt;
    Eigen::FullPivLU<EigenMat> lu(to_eigen(a));
    lu.setThreshold(tol);
    if (!lu.isInvertible()) return std::nullopt;
    return from_eigen(lu.inverse());
}

template <class S>
bool in_span(const Matrix<S>& basis, const Matrix<S>& vecs, double tol) {
    if (vecs.cols() == 0) return true;
    if (basis.cols() == 0) return vecs.is_zero(tol);
    return rank(hstack(basis, vecs), tol) == rank(basis, tol);
}

template <class S>
bool same_span(const Matrix<S>& a, const Matrix<S>& b, double tol) {
    std::size_t ra = a.cols() ? rank(a, tol) : 0;
    std::size_t rb = b.cols() ? rank(b, tol) : 0;
    if (ra != rb) return false;
    if (ra == 0) return true;
    return rank(hstack(a, b), tol) == ra;
}

Matrix<FloatScalar> to_float(const Matrix<ExactScalar>& m) {
    Matrix<FloatScalar> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = m(i, j).to_complex();
    return r;
}

#define CLIFF_INSTANTIATE(S)                                                   \
    template class Matrix<S>;                                                  \
    template Matrix<S> hstack(const Matrix<S>&, const Matrix<S>&);             \
    template Matrix<S> vstack(const Matrix<S>&, const Matrix<S>&);             \
    template bool in_span(const Matrix<S>&, const Matrix<S>&, double);         \
    template bool same_span(const Matrix<S>&, const Matrix<S>&, double);

CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
