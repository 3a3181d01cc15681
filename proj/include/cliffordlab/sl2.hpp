#pragma once

#include "cliffordlab/clifford.hpp"
#include "cliffordlab/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cliff {

// The Clifford-side operators on Cl(V) (x) C next to the exterior Lefschetz triple,
// all as 4^n x 4^n matrices in the shared blade basis.
template <class S>
struct Sl2Operators {
    explicit Sl2Operators(const AlgebraContext& c) : ctx(&c), omega(c), omega0(c) {}

    const AlgebraContext* ctx;

    // Clifford side: Lc(phi) = -sum eps_k phi epsbar_k, Lc_bar likewise, Hc = [Lc, Lc_bar], Jc = -i J_der
    Matrix<S> Lc, Lc_bar, Hc, Jc;
    // exterior side: L = omega ^ ., Lambda = L^*, H = sum (n - p) Pi_p
    Matrix<S> L, Lambda, H;
    Matrix<S> J_alg, J_alg_inv, J_der;
    Matrix<S> alpha, trs;

    Multivector<S> omega, omega0;

    std::size_t dim() const { return Lc.rows(); }
    // X_c = J_alg^{-1} X J_alg and X^t = trs X trs
    Matrix<S> conj_c(const Matrix<S>& X) const { return J_alg_inv * X * J_alg; }
    Matrix<S> conj_t(const Matrix<S>& X) const { return trs * X * trs; }
};

// omega = sum_j e_j Je_j, written frame-free as (1/2) sum_a v_a ^ J v_a
template <class S> Multivector<S> fundamental_form(const AlgebraContext& ctx);

template <class S> void build_L_bar_L_H(const AlgebraContext& ctx, Sl2Operators<S>& ops);
template <class S> void build_J_operators(const AlgebraContext& ctx, Sl2Operators<S>& ops);
template <class S> void build_exterior_LLambdaH(const AlgebraContext& ctx, Sl2Operators<S>& ops);
template <class S> Sl2Operators<S> build_sl2(const AlgebraContext& ctx);

// Projector onto the `value` eigenspace of T via Lagrange interpolation over an
// integer spectrum. Assumes T is diagonalizable with spectrum inside `spectrum`.
template <class S>
Matrix<S> eigen_projector(const Matrix<S>& T, int value, const std::vector<int>& spectrum);

// All eigenprojectors of T over the spectrum -n..n; throws std::runtime_error
// if they fail to resolve the identity or T is not diagonal on their images.
template <class S>
std::map<int, Matrix<S>> spectral_projectors(const Matrix<S>& T, int n, double tol);

using Bidegree = std::pair<int, int>;

// Form side: pi_{p,q} = Pi_{p+q} P^{Jc}_{q-p}; keys (p,q).
template <class S>
std::map<Bidegree, Matrix<S>> form_bidegree_projectors(const Sl2Operators<S>& ops, double tol);

// Clifford side: joint eigenprojectors of (Jc, Hc); keys (r,s), zero ones omitted.
template <class S>
std::map<Bidegree, Matrix<S>> clifford_bidegree_projectors(const Matrix<S>& Jc, const Matrix<S>& Hc, int n,
                                                           double tol);

template <class S>
struct BidegreeTable {
    std::map<Bidegree, Matrix<S>> clifford;  // (r,s) -> basis columns
    std::map<Bidegree, Matrix<S>> forms;     // (p,q) -> basis columns
};

template <class S> BidegreeTable<S> bidegree_decompose(const Sl2Operators<S>& ops, double tol);

// g = exp(-pi i/4 H) exp(-pi i/4 Hc), assembled from eigenprojectors.
template <class S>
std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Sl2Operators<S>& ops, double tol);
// Same construction for an arbitrary pair (H, Hc) with spectrum in -n..n.
template <class S>
std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Matrix<S>& H, const Matrix<S>& Hc, int n, double tol);

// Identity suites at the pure algebra level.
template <class S> std::vector<Check> sl2_checks(const Sl2Operators<S>& ops, double tol);
template <class S> std::vector<Check> correspondence_checks(const Sl2Operators<S>& ops, double tol);
template <class S> std::vector<Check> bigrading_checks(const Sl2Operators<S>& ops, double tol);
template <class S> std::vector<Check> hodge_aut_checks(const Sl2Operators<S>& ops, double tol);
template <class S> Report verify_correspondences(const Sl2Operators<S>& ops, double tol);

}  // namespace cliff
