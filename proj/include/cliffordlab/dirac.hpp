#pragma once

#include "cliffordlab/connections.hpp"
#include "cliffordlab/forms.hpp"

#include <map>
#include <vector>

namespace cliff {

// A complex tangent vector as frame coefficients X = sum_a X[a] v_a.
template <class S> using CVector = std::vector<S>;

// Dirac-type operators of a left-invariant almost Hermitian structure acting
// on invariant sections of Cl(M) (x) C, in the blade basis shared with forms.
template <class S>
struct DiracOperators {
    using R = real_of<S>;

    explicit DiracOperators(const FormOperators<S>& f);

    const FormOperators<S>* forms;
    Geometry<R> geo;

    Matrix<S> D_lc;  // Riemannian Dirac operator
    Matrix<S> B;     // D_{-1}
    Matrix<S> curly_D, curly_D_bar;  // (D_lc +- i (D_lc)_c) / 2
    Matrix<S> curly_B, curly_B_bar;  // (B +- i B_c) / 2
    std::map<Bidegree, Matrix<S>> clifford_pi;  // (r,s) projectors

    const Sl2Operators<S>& sl2() const { return forms->sl2; }
    std::size_t dim() const { return forms->dim(); }
    int m() const { return geo.m; }

    // Clifford-side conjugations: X_c = J_alg^{-1} X J_alg, X^t = trs X trs
    Matrix<S> c(const Matrix<S>& X) const { return forms->sl2.conj_c(X); }
    Matrix<S> t(const Matrix<S>& X) const { return forms->sl2.conj_t(X); }

    // nabla_{v_a} for each frame vector, as derivations of the Clifford algebra
    std::vector<Matrix<S>> nabla(const Tensor3<R>& gamma) const;
    // sum_a v_a . nabla_{v_a}
    Matrix<S> dirac(const Tensor3<R>& gamma) const;
    Matrix<S> D_t(const mpq_class& t) const;
    // (D + i D_c) / 2
    Matrix<S> split(const Matrix<S>& D) const;
    // left Clifford multiplication by a complex vector
    Matrix<S> left_mul(const CVector<S>& X) const;

    // eps(v_a) = (v_a - i J v_a) / 2 and its conjugate
    CVector<S> eps_vec(int a) const;
    CVector<S> eps_bar_vec(int a) const;
    CVector<S> frame_vec(int a) const;
    CVector<S> J_vec(const CVector<S>& X) const;
    Multivector<S> vector_mv(const CVector<S>& X) const;
    // the Lee form as a vector
    CVector<S> theta_vec() const;
    // D_A = D_t - D_lc for the canonical potential A^t
    Matrix<S> D_A(const mpq_class& t) const { return dirac(geo.canonical_potential(t)); }
    // d_A on forms: the odd derivation with d_A(Y) = sum_{j,k} A(v_j,Y,v_k) v_j ^ v_k on 1-forms
    Matrix<S> d_A(const Tensor3<R>& A) const;
};

// phi(X,Y,Z) for complex vectors
template <class S>
S eval3(const Tensor3<real_of<S>>& phi, const CVector<S>& X, const CVector<S>& Y, const CVector<S>& Z);

// Covariant calculus of one connection on invariant sections, complex
// linearly extended in the vector slots.
template <class S>
struct ConnectionCalculus {
    using R = real_of<S>;

    ConnectionCalculus(const DiracOperators<S>& ops, const Tensor3<R>& gamma);

    const DiracOperators<S>* ops;
    Tensor3<R> gamma;
    std::vector<Matrix<S>> N;   // nabla_{v_a}
    std::vector<Matrix<S>> Rm;  // R(v_a, v_b) at index a*m + b

    Matrix<S> nabla(const CVector<S>& X) const;
    CVector<S> cov(const CVector<S>& X, const CVector<S>& Y) const;  // nabla_X Y
    CVector<S> bracket(const CVector<S>& X, const CVector<S>& Y) const;
    CVector<S> torsion(const CVector<S>& X, const CVector<S>& Y) const;
    // nabla_X nabla_Y - nabla_{nabla_X Y}
    Matrix<S> second(const CVector<S>& X, const CVector<S>& Y) const;
    Matrix<S> curvature(const CVector<S>& X, const CVector<S>& Y) const;
    // [nabla_X, nabla_Y] - nabla_{[X,Y]}, straight from the definition
    Matrix<S> curvature_direct(const CVector<S>& X, const CVector<S>& Y) const;
};

// The dirac identity lists. `ts` are the canonical-connection parameters exercised.
template <class S> std::vector<Check> dirac_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts);
template <class S>
std::vector<Check> correspondence_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts);
template <class S> std::vector<Check> laplacian_checks(const DiracOperators<S>& ops);
template <class S> std::vector<Check> bochner_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts);
// Identities requiring d omega = 0.
template <class S> std::vector<Check> almost_kaehler_dirac_checks(const DiracOperators<S>& ops);

// The Bochner right-hand sides, exposed for tests.
template <class S> Matrix<S> bochner_square_rhs(const DiracOperators<S>& ops, const mpq_class& t);
template <class S> Matrix<S> bochner_anticommutator_rhs(const DiracOperators<S>& ops, const mpq_class& t);

}  // namespace cliff
