#pragma once

#include "cliffordlab/matrix.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cliff {

// Bit k-1 set means the generator v_k is present; coefficients refer to the
// ascending product v_{i1} v_{i2} ... (equivalently v_{i1} ^ v_{i2} ^ ...).
using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

// Sign of sorting the concatenation of ascending lists a, b.
int reorder_sign(Blade a, Blade b);
// Clifford product of basis blades, with v_k v_k = -1.
inline int clifford_sign(Blade a, Blade b) { return (grade(a & b) % 2 ? -1 : 1) * reorder_sign(a, b); }
// Exterior product of basis blades; 0 when they overlap.
inline int wedge_sign(Blade a, Blade b) { return (a & b) ? 0 : reorder_sign(a, b); }
// v_k contracted into a blade: 0 when v_k is absent.
int contract_sign(int k, Blade b);

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Real inner product space R^{2n} with orthonormal basis v_1..v_{2n} and an
// orthogonal J with J^2 = -1. J is stored by columns: J v_j = sum_k J[k][j] v_k.
class AlgebraContext {
public:
    // J v_j = v_{n+j}, J v_{n+j} = -v_j
    static AlgebraContext standard(int n);
    // Throws std::invalid_argument unless J is orthogonal with J^2 = -1.
    AlgebraContext(int n, RationalMatrix J, std::vector<std::string> labels = {});

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    std::size_t algebra_dim() const { return std::size_t(1) << (2 * n_); }
    const RationalMatrix& J() const { return J_; }
    const std::string& label(int k) const { return labels_[k]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const AlgebraContext& o) const { return n_ == o.n_ && J_ == o.J_; }

private:
    int n_;
    RationalMatrix J_;
    std::vector<std::string> labels_;
};

// Sparse element of Cl(V) (x) C. The same storage serves the exterior algebra
// through the blade identification; which product applies is up to the caller.
template <class S>
class Multivector {
public:
    using Traits = ScalarTraits<S>;

    explicit Multivector(const AlgebraContext& ctx) : ctx_(&ctx) {}
    static Multivector scalar(const AlgebraContext& ctx, const S& s);
    static Multivector blade(const AlgebraContext& ctx, Blade b, const S& s = S(1));
    // v_k, 0-based index k
    static Multivector vector(const AlgebraContext& ctx, int k);
    // sum_k coeffs[k] v_k
    static Multivector vector(const AlgebraContext& ctx, const std::vector<S>& coeffs);
    static Multivector from_dense(const AlgebraContext& ctx, const std::vector<S>& v, double tol = 0);

    const AlgebraContext& context() const { return *ctx_; }
    const std::map<Blade, S>& terms() const { return terms_; }
    S coefficient(Blade b) const;
    void add_term(Blade b, const S& s);

    std::vector<S> dense() const;
    Multivector grade_part(int p) const;
    bool is_zero() const { return terms_.empty(); }
    // nonzero only in degree 1
    bool is_vector() const;

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const S& s);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
    Multivector operator-() const { return *this * S(-1); }

    bool operator==(const Multivector& o) const { return *ctx_ == *o.ctx_ && terms_ == o.terms_; }

    std::string str() const;

private:
    const AlgebraContext* ctx_;
    std::map<Blade, S> terms_;
};

// All binary operations throw std::invalid_argument on a context mismatch.
template <class S> Multivector<S> clifford_mul(const Multivector<S>& x, const Multivector<S>& y);
template <class S> Multivector<S> wedge(const Multivector<S>& x, const Multivector<S>& y);
// v must be a pure vector; extended complex-bilinearly.
template <class S> Multivector<S> contract(const Multivector<S>& v, const Multivector<S>& x);
template <class S> Multivector<S> antipodal(const Multivector<S>& x);
template <class S> Multivector<S> transpose(const Multivector<S>& x);
template <class S> Multivector<S> hodge_star(const Multivector<S>& x);
template <class S> Multivector<S> conjugate_c(const Multivector<S>& x);
template <class S> Multivector<S> volume(const AlgebraContext& ctx);

// J v and the (1,0)/(0,1) parts (v - iJv)/2, (v + iJv)/2 of a vector.
template <class S> Multivector<S> apply_J(const Multivector<S>& v);
template <class S> Multivector<S> epsilon(const Multivector<S>& v);
template <class S> Multivector<S> epsilon_bar(const Multivector<S>& v);

// Operator matrices on the 4^n blade basis; column b holds the image of blade b.
template <class S> Matrix<S> left_mul_matrix(const Multivector<S>& x);
template <class S> Matrix<S> right_mul_matrix(const Multivector<S>& x);
template <class S> Matrix<S> wedge_matrix(const Multivector<S>& x);
template <class S> Matrix<S> interior_matrix(const Multivector<S>& v);
template <class S> Matrix<S> alpha_matrix(const AlgebraContext& ctx);
template <class S> Matrix<S> transpose_matrix(const AlgebraContext& ctx);
template <class S> Matrix<S> hodge_star_matrix(const AlgebraContext& ctx);
template <class S> Matrix<S> degree_projector(const AlgebraContext& ctx, int p);
// J extended as an algebra automorphism (wedge of images).
template <class S> Matrix<S> J_alg_matrix(const AlgebraContext& ctx);
// J extended as a derivation.
template <class S> Matrix<S> J_der_matrix(const AlgebraContext& ctx);
// Derivation extending a skew endomorphism A of V, A v_j = sum_k A[k][j] v_k.
template <class S> Matrix<S> derivation_matrix(const AlgebraContext& ctx, const Matrix<S>& A);

template <class S> Matrix<S> rational_to_matrix(const RationalMatrix& m);

template <class S> Multivector<S> apply_operator(const Matrix<S>& T, const Multivector<S>& x) {
    return Multivector<S>::from_dense(x.context(), T.apply(x.dense()));
}

}  // namespace cliff
