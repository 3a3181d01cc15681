#pragma once

#include "cliffordlab/connections.hpp"
#include "cliffordlab/sl2.hpp"

namespace cliff {

// Sum of the blocks of T that shift bidegree by (dp, dq).
template <class S>
Matrix<S> bidegree_piece(const std::map<Bidegree, Matrix<S>>& pi, const Matrix<S>& T, int dp, int dq);
template <class S>
bool is_pure(const std::map<Bidegree, Matrix<S>>& pi, const Matrix<S>& T, int dp, int dq, double tol);

// phi -> -sum_j (v_j -| gamma) ^ (v_j -| phi), contractions complex bilinear.
template <class S> Matrix<S> rho_matrix(const Multivector<S>& gamma);

template <class S> Matrix<S> laplacian(const Matrix<S>& T) { return T * T.adjoint() + T.adjoint() * T; }

// sum_{j,k} phi(v_j, Y, v_k) v_j ^ v_k for Y = sum_m y[m] v_m.
template <class S>
Multivector<S> pair_form(const AlgebraContext& ctx, const Tensor3<real_of<S>>& phi, const std::vector<real_of<S>>& y);

// The operators on invariant complex forms of a model, as matrices on the
// blade basis of the exterior algebra.
template <class S>
struct FormOperators {
    FormOperators(const LieModel& m, double tol);

    LieModel model;
    double tol;
    Sl2Operators<S> sl2;
    std::map<Bidegree, Matrix<S>> pi;  // (p,q) projectors

    Matrix<S> d, del, delbar, mu, mubar;
    Multivector<S> omega, d_omega, d_omega_plus, del_omega, delbar_omega, theta;

    // rho_plus from d omega+; rho_del = -rho_matrix(del omega) so that i rho_del(omega) = del omega
    Matrix<S> rho_plus, rho_del, rho_delbar;
    Matrix<S> lambda_plus, lambda_del, lambda_delbar;
    Matrix<S> tau_plus, tau_del, tau_delbar;
    Matrix<S> E_theta, I_theta;

    // J on covectors: J_der = i(p-q) on (p,q)-forms, the negative of the
    // Clifford-side derivation; J_alg is the inverse of the Clifford-side one.
    Matrix<S> J_der, J_alg, J_alg_inv;
    Matrix<S> conj_c(const Matrix<S>& X) const { return J_alg_inv * X * J_alg; }

    // eps = del - i rho_del, delbar_hat = delbar + i rhobar_del
    Matrix<S> eps, delbar_hat;
    // delta = del + mubar, delta_bar = delbar + mu
    Matrix<S> delta, delta_bar;

    bool integrable = false;      // N = 0
    bool almost_kaehler = false;  // d omega = 0
    bool balanced = false;        // theta = 0

    std::size_t dim() const { return d.rows(); }
    const AlgebraContext& ctx() const { return model.context(); }
};

// Structural identities valid on every model.
template <class S> std::vector<Check> form_checks(const FormOperators<S>& f);
// Generalized Kaehler identities; meaningful only when d omega = 0.
template <class S> std::vector<Check> almost_kaehler_form_checks(const FormOperators<S>& f);

}  // namespace cliff
