#include "cliffordlab/forms.hpp"
#include "cliffordlab/check_util.hpp"

namespace cliff {

template <class S>
Matrix<S> bidegree_piece(const std::map<Bidegree, Matrix<S>>& pi, const Matrix<S>& T, int dp, int dq) {
    Matrix<S> out(T.rows(), T.cols());
    for (const auto& [pq, P] : pi) {
        auto it = pi.find({pq.first + dp, pq.second + dq});
        if (it != pi.end()) out += it->second * T * P;
    }
    return out;
}

template <class S>
bool is_pure(const std::map<Bidegree, Matrix<S>>& pi, const Matrix<S>& T, int dp, int dq, double tol) {
    return (T - bidegree_piece(pi, T, dp, dq)).is_zero(tol);
}

template <class S>
Matrix<S> rho_matrix(const Multivector<S>& gamma) {
    const auto& ctx = gamma.context();
    Matrix<S> out(ctx.algebra_dim(), ctx.algebra_dim());
    for (int j = 0; j < ctx.dim(); ++j) {
        auto v = Multivector<S>::vector(ctx, j);
        auto vg = contract(v, gamma);
        if (!vg.is_zero()) out -= wedge_matrix(vg) * interior_matrix(v);
    }
    return out;
}

template <class S>
Multivector<S> pair_form(const AlgebraContext& ctx, const Tensor3<real_of<S>>& phi, const std::vector<real_of<S>>& y) {
    using R = real_of<S>;
    const int m = ctx.dim();
    Multivector<S> out(ctx);
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
            R coef(0);
            for (int a = 0; a < m; ++a)
                if (y[a] != R(0)) coef += y[a] * (phi(j, a, k) - phi(k, a, j));
            out.add_term((Blade(1) << j) | (Blade(1) << k), to_scalar<S>(coef));
        }
    return out;
}

namespace {

using namespace check_util;

template <class R>
std::vector<R> basis_vector(int m, int k) {
    std::vector<R> y(m, R(0));
    y[k] = R(1);
    return y;
}

template <class R>
std::vector<R> J_times(const Geometry<R>& g, const std::vector<R>& y) {
    std::vector<R> out(g.m, R(0));
    for (int k = 0; k < g.m; ++k)
        for (int j = 0; j < g.m; ++j) out[k] += g.Jkj(k, j) * y[j];
    return out;
}

}  // namespace

template <class S>
FormOperators<S>::FormOperators(const LieModel& m, double tol_)
    : model(m), tol(tol_), sl2(build_sl2<S>(model.context())), omega(model.context()), d_omega(model.context()),
      d_omega_plus(model.context()), del_omega(model.context()), delbar_omega(model.context()),
      theta(model.context()) {
    using R = real_of<S>;
    const S i = ScalarTraits<S>::i();
    pi = form_bidegree_projectors(sl2, tol);

    d = ce_differential<S>(model);
    del = bidegree_piece(pi, d, 1, 0);
    delbar = bidegree_piece(pi, d, 0, 1);
    mu = bidegree_piece(pi, d, 2, -1);
    mubar = bidegree_piece(pi, d, -1, 2);

    omega = sl2.omega;
    d_omega = apply_operator(d, omega);
    Geometry<R> geo(model);
    d_omega_plus = three_form_from_tensor<S>(model.context(), geo.plus(geo.d_omega()));
    del_omega = apply_operator(pi.at({2, 1}), d_omega);
    delbar_omega = apply_operator(pi.at({1, 2}), d_omega);
    theta = apply_operator(sl2.Lambda, d_omega);

    rho_plus = rho_matrix(d_omega_plus);
    rho_del = -rho_matrix(del_omega);
    rho_delbar = rho_del.conj();
    lambda_plus = wedge_matrix(d_omega_plus);
    lambda_del = wedge_matrix(del_omega);
    lambda_delbar = wedge_matrix(delbar_omega);
    tau_plus = commutator(sl2.Lambda, lambda_plus);
    tau_del = commutator(sl2.Lambda, lambda_del);
    tau_delbar = commutator(sl2.Lambda, lambda_delbar);
    E_theta = wedge_matrix(theta);
    I_theta = interior_matrix(theta);

    J_der = -sl2.J_der;
    J_alg = sl2.J_alg_inv;
    J_alg_inv = sl2.J_alg;

    eps = del - rho_del * i;
    delbar_hat = delbar + rho_delbar * i;
    delta = del + mubar;
    delta_bar = delbar + mu;

    integrable = geo.nijenhuis().is_zero(tol);
    almost_kaehler = mv_zero(d_omega, tol);
    balanced = mv_zero(theta, tol);
}


template <class S>
std::vector<Check> form_checks(const FormOperators<S>& fo) {
    using R = real_of<S>;
    using MV = Multivector<S>;
    const auto* f = &fo;
    const double tol = fo.tol;
    const S i = ScalarTraits<S>::i();
    auto geo = std::make_shared<Geometry<R>>(fo.model);
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    add("forms.d_split", "d = ∂ + ∂̄ + μ + μ̄", [f, tol] {
        return eq(f->d, f->del + f->delbar + f->mu + f->mubar, tol);
    });
    add("forms.d_squared", "d² = 0", [f, tol] { return zero(f->d * f->d, tol); });
    add("forms.mu2", "μ² = 0 (and adjoint)", [f, tol] { return zero_with_adjoint(f->mu * f->mu, tol); });
    add("forms.mubar2", "μ̄² = 0 (and adjoint)", [f, tol] { return zero_with_adjoint(f->mubar * f->mubar, tol); });
    add("forms.mu_del", "μ∂ + ∂μ = 0 (and adjoint)",
        [f, tol] { return zero_with_adjoint(anticommutator(f->mu, f->del), tol); });
    add("forms.mubar_delbar", "μ̄∂̄ + ∂̄μ̄ = 0 (and adjoint)",
        [f, tol] { return zero_with_adjoint(anticommutator(f->mubar, f->delbar), tol); });
    add("forms.mu_delbar_del2", "μ∂̄ + ∂̄μ + ∂² = 0 (and adjoint)", [f, tol] {
        return zero_with_adjoint(anticommutator(f->mu, f->delbar) + f->del * f->del, tol);
    });
    add("forms.mubar_del_delbar2", "μ̄∂ + ∂μ̄ + ∂̄² = 0 (and adjoint)", [f, tol] {
        return zero_with_adjoint(anticommutator(f->mubar, f->del) + f->delbar * f->delbar, tol);
    });
    add("forms.del_delbar", "∂∂̄ + ∂̄∂ + μμ̄ + μ̄μ = 0 (and adjoint)", [f, tol] {
        return zero_with_adjoint(anticommutator(f->del, f->delbar) + anticommutator(f->mu, f->mubar), tol);
    });
    add("forms.integrable_iff", "N = 0 ⇔ μ = 0", [f, tol] {
        bool mu0 = f->mu.is_zero(tol) && f->mubar.is_zero(tol);
        return expect_true("", "", mu0 == f->integrable,
                           "N zero: " + std::to_string(f->integrable) + ", mu zero: " + std::to_string(mu0));
    });
    add("forms.nijenhuis_dual", "Σ (N − 3/2 PN)(v_j,Y,v_k) v_j∧v_k = (μ + μ̄)(Y)", [f, tol, geo] {
        auto N = geo->nijenhuis();
        auto phi = N - geo->P(N) * RealTraits<R>::from_rational(mpq_class(3, 2));
        std::vector<CheckResult> parts;
        for (int y = 0; y < geo->m; ++y) {
            auto lhs = pair_form<S>(f->ctx(), phi, basis_vector<R>(geo->m, y));
            auto rhs = apply_operator(f->mu + f->mubar, MV::vector(f->ctx(), y));
            parts.push_back(mv_eq(lhs, rhs, tol));
        }
        return all_of(parts);
    });

    add("forms.domega_plus", "dω⁺ = ∂ω + ∂̄ω", [f, tol] {
        return mv_eq(f->d_omega_plus, f->del_omega + f->delbar_omega, tol);
    });
    add("forms.lee", "θ = Λ(dω) = Λ(dω⁺)", [f, tol] {
        return mv_eq(apply_operator(f->sl2.Lambda, f->d_omega_plus), f->theta, tol);
    });
    add("forms.lee_r", "r(M(d_cω⁺)) = 2θ", [f, tol, geo] {
        auto r = geo->r(geo->M(geo->plus(geo->dc_omega())));
        MV lhs(f->ctx());
        for (int k = 0; k < geo->m; ++k) lhs.add_term(Blade(1) << k, to_scalar<S>(r[k]));
        return mv_eq(lhs, f->theta * rat<S>(2), tol);
    });

    add("forms.rho_frame", "ρ⁺ = −(ρ_∂ + ρ̄_∂)", [f, tol] { return eq(f->rho_plus, -(f->rho_del + f->rho_delbar), tol); });
    add("forms.rho_bidegree", "ρ_∂ has bidegree (1,0), ρ̄_∂ has bidegree (0,1)", [f, tol] {
        return expect_true("", "", is_pure(f->pi, f->rho_del, 1, 0, tol) && is_pure(f->pi, f->rho_delbar, 0, 1, tol));
    });
    add("forms.rho_conj", "ρ̄_∂ = c ρ_∂ c, ρ̄_∂ = ρ_∂̄", [f, tol] {
        return all_of({eq(f->rho_delbar, f->rho_del.conj(), tol), eq(f->rho_delbar, -rho_matrix(f->delbar_omega), tol)});
    });
    add("forms.rho_Jalg", "J_alg⁻¹ρ_∂J_alg = −iρ_∂, J_alg⁻¹ρ̄_∂J_alg = iρ̄_∂", [f, tol, i] {
        return all_of({eq(f->conj_c(f->rho_del), f->rho_del * (-i), tol),
                       eq(f->conj_c(f->rho_delbar), f->rho_delbar * i, tol)});
    });
    add("forms.rho_c", "ρ⁺_c = i(ρ̄_∂ − ρ_∂)", [f, tol, i] {
        return eq(f->sl2.conj_c(f->rho_plus), (f->rho_delbar - f->rho_del) * i, tol);
    });
    add("forms.rho_omega", "iρ_∂(ω) = ∂ω", [f, tol, i] {
        return mv_eq(apply_operator(f->rho_del, f->omega) * i, f->del_omega, tol);
    });
    add("forms.rho_zero_iff", "ρ_∂ = 0 ⇔ ∂ω = ∂̄ω = 0", [f, tol] {
        bool r0 = f->rho_del.is_zero(tol);
        bool w0 = mv_zero(f->del_omega, tol) && mv_zero(f->delbar_omega, tol);
        return expect_true("", "", r0 == w0);
    });

    add("forms.lambda_one", "λ⁺(1) = dω⁺", [f, tol] {
        return mv_eq(apply_operator(f->lambda_plus, MV::scalar(f->ctx(), S(1))), f->d_omega_plus, tol);
    });
    add("forms.tau_split", "τ⁺ = τ_∂ + τ̄_∂, τ_∂ of bidegree (1,0)", [f, tol] {
        return all_of({eq(f->tau_plus, f->tau_del + f->tau_delbar, tol),
                       expect_true("", "", is_pure(f->pi, f->tau_del, 1, 0, tol)),
                       eq(f->tau_delbar, f->tau_del.conj(), tol)});
    });
    add("forms.tau_from_domega", "½ Σ dω⁺(v_j,JY,v_k) v_j∧v_k = τ⁺(Y) − θ∧Y", [f, tol, geo] {
        auto phi = geo->plus(geo->d_omega());
        std::vector<CheckResult> parts;
        for (int y = 0; y < geo->m; ++y) {
            auto Y = MV::vector(f->ctx(), y);
            auto lhs = pair_form<S>(f->ctx(), phi, J_times(*geo, basis_vector<R>(geo->m, y))) * rat<S>(1, 2);
            auto rhs = apply_operator(f->tau_plus, Y) - wedge(f->theta, Y);
            parts.push_back(mv_eq(lhs, rhs, tol));
        }
        return all_of(parts);
    });
    add("forms.rho_from_dcomega", "½ Σ d_cω⁺(v_j,Y,v_k) v_j∧v_k = −ρ⁺_c(Y)", [f, tol, geo] {
        auto phi = geo->plus(geo->dc_omega());
        auto rho_c = f->sl2.conj_c(f->rho_plus);
        std::vector<CheckResult> parts;
        for (int y = 0; y < geo->m; ++y) {
            auto lhs = pair_form<S>(f->ctx(), phi, basis_vector<R>(geo->m, y)) * rat<S>(1, 2);
            auto rhs = -apply_operator(rho_c, MV::vector(f->ctx(), y));
            parts.push_back(mv_eq(lhs, rhs, tol));
        }
        return all_of(parts);
    });
    add("forms.M_dcomega_pairing", "Σ M(d_cω⁺)(v_j,Y,v_k) v_j∧v_k = ½ Σ (d_cω⁺(v_j,Y,v_k) + dω⁺(v_j,JY,v_k)) v_j∧v_k",
        [f, tol, geo] {
            auto dc = geo->plus(geo->dc_omega());
            auto dw = geo->plus(geo->d_omega());
            auto M = geo->M(dc);
            std::vector<CheckResult> parts;
            for (int y = 0; y < geo->m; ++y) {
                auto Y = basis_vector<R>(geo->m, y);
                auto lhs = pair_form<S>(f->ctx(), M, Y);
                auto rhs = (pair_form<S>(f->ctx(), dc, Y) + pair_form<S>(f->ctx(), dw, J_times(*geo, Y))) * rat<S>(1, 2);
                parts.push_back(mv_eq(lhs, rhs, tol));
            }
            return all_of(parts);
        });
    add("forms.M_dcomega", "Σ M(d_cω⁺)(v_j,Y,v_k) v_j∧v_k = τ⁺(Y) − θ∧Y − ρ⁺_c(Y)", [f, tol, geo] {
        auto M = geo->M(geo->plus(geo->dc_omega()));
        auto rho_c = f->sl2.conj_c(f->rho_plus);
        std::vector<CheckResult> parts;
        for (int y = 0; y < geo->m; ++y) {
            auto Y = MV::vector(f->ctx(), y);
            auto lhs = pair_form<S>(f->ctx(), M, basis_vector<R>(geo->m, y));
            auto rhs = apply_operator(f->tau_plus - rho_c, Y) - wedge(f->theta, Y);
            parts.push_back(mv_eq(lhs, rhs, tol));
        }
        return all_of(parts);
    });

    add("forms.delta_split", "d = δ + δ̄", [f, tol] { return eq(f->d, f->delta + f->delta_bar, tol); });
    add("forms.eps_bidegree", "ε has bidegree (1,0), ∂̄̂ has bidegree (0,1)", [f, tol] {
        return expect_true("", "", is_pure(f->pi, f->eps, 1, 0, tol) && is_pure(f->pi, f->delbar_hat, 0, 1, tol));
    });
    add("forms.ah_Lambda_delbarhat", "[Λ, ∂̄̂] = −iε*", [f, tol, i] {
        return eq(commutator(f->sl2.Lambda, f->delbar_hat), f->eps.adjoint() * (-i), tol);
    });
    add("forms.ah_L_epsstar", "[L, ε*] = i∂̄̂", [f, tol, i] {
        return eq(commutator(f->sl2.L, f->eps.adjoint()), f->delbar_hat * i, tol);
    });
    add("forms.ah_Lambda_eps", "[Λ, ε] = i∂̄̂*", [f, tol, i] {
        return eq(commutator(f->sl2.Lambda, f->eps), f->delbar_hat.adjoint() * i, tol);
    });
    add("forms.ah_L_delbarhatstar", "[L, ∂̄̂*] = −iε", [f, tol, i] {
        return eq(commutator(f->sl2.L, f->delbar_hat.adjoint()), f->eps * (-i), tol);
    });
    add("forms.ah_Lambda_adjoints", "[Λ, ε*] = [Λ, ∂̄̂*] = 0", [f, tol] {
        return all_of({zero(commutator(f->sl2.Lambda, f->eps.adjoint()), tol),
                       zero(commutator(f->sl2.Lambda, f->delbar_hat.adjoint()), tol)});
    });
    add("forms.ah_L", "[L, ε] = [L, ∂̄̂] = 0", [f, tol] {
        return all_of({zero(commutator(f->sl2.L, f->eps), tol), zero(commutator(f->sl2.L, f->delbar_hat), tol)});
    });

    add("forms.Jder_mu", "[μ, J_der] = −3iμ, J_alg⁻¹μJ_alg = iμ", [f, tol, i] {
        return all_of({eq(commutator(f->mu, f->J_der), f->mu * (i * rat<S>(-3)), tol),
                       eq(f->conj_c(f->mu), f->mu * i, tol)});
    });
    add("forms.Jder_mubar", "[μ̄, J_der] = 3iμ̄, J_alg⁻¹μ̄J_alg = −iμ̄", [f, tol, i] {
        return all_of({eq(commutator(f->mubar, f->J_der), f->mubar * (i * rat<S>(3)), tol),
                       eq(f->conj_c(f->mubar), f->mubar * (-i), tol)});
    });
    add("forms.Jder_del", "[∂, J_der] = −i∂ = J_alg⁻¹∂J_alg, [∂̄, J_der] = i∂̄ = J_alg⁻¹∂̄J_alg", [f, tol, i] {
        return all_of({eq(commutator(f->del, f->J_der), f->del * (-i), tol),
                       eq(f->conj_c(f->del), f->del * (-i), tol),
                       eq(commutator(f->delbar, f->J_der), f->delbar * i, tol),
                       eq(f->conj_c(f->delbar), f->delbar * i, tol)});
    });
    return c;
}

template <class S>
std::vector<Check> almost_kaehler_form_checks(const FormOperators<S>& fo) {
    const auto* f = &fo;
    const double tol = fo.tol;
    const S i = ScalarTraits<S>::i();
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };
    const Matrix<S>* Lp = &fo.sl2.L;
    const Matrix<S>* Lambdap = &fo.sl2.Lambda;
    add("ak.Lambda_deltabar", "[Λ, δ̄] = −iδ*", [f, tol, i, Lp, Lambdap] {
        return eq(commutator(*Lambdap, f->delta_bar), f->delta.adjoint() * (-i), tol);
    });
    add("ak.L_deltastar", "[L, δ*] = iδ̄", [f, tol, i, Lp] {
        return eq(commutator(*Lp, f->delta.adjoint()), f->delta_bar * i, tol);
    });
    add("ak.Lambda_delta", "[Λ, δ] = iδ̄*", [f, tol, i, Lambdap] {
        return eq(commutator(*Lambdap, f->delta), f->delta_bar.adjoint() * i, tol);
    });
    add("ak.L_deltabarstar", "[L, δ̄*] = −iδ", [f, tol, i, Lp] {
        return eq(commutator(*Lp, f->delta_bar.adjoint()), f->delta * (-i), tol);
    });
    add("ak.Lambda_adjoints", "[Λ, δ*] = [Λ, δ̄*] = 0", [f, tol, Lambdap] {
        return all_of({zero(commutator(*Lambdap, f->delta.adjoint()), tol),
                       zero(commutator(*Lambdap, f->delta_bar.adjoint()), tol)});
    });
    add("ak.L", "[L, δ] = [L, δ̄] = 0", [f, tol, Lp] {
        return all_of({zero(commutator(*Lp, f->delta), tol), zero(commutator(*Lp, f->delta_bar), tol)});
    });
    add("ak.d_Lambda", "[d, Λ] = d_c*, [d*, L] = −d_c, [d, L] = [d*, Λ] = 0", [f, tol, Lp, Lambdap] {
        Matrix<S> dc = f->sl2.conj_c(f->d) * rat<S>(-1);
        return all_of({eq(commutator(f->d, *Lambdap), dc.adjoint(), tol),
                       eq(commutator(f->d.adjoint(), *Lp), dc * rat<S>(-1), tol), zero(commutator(f->d, *Lp), tol),
                       zero(commutator(f->d.adjoint(), *Lambdap), tol)});
    });
    add("ak.laplacians", "Δ_δ = Δ_δ̄", [f, tol] { return eq(laplacian(f->delta), laplacian(f->delta_bar), tol); });
    add("ak.rho_vanishes", "dω = 0 ⇒ ρ_∂ = 0, ε = ∂, ∂̄̂ = ∂̄", [f, tol] {
        return all_of({zero(f->rho_del, tol), eq(f->eps, f->del, tol), eq(f->delbar_hat, f->delbar, tol)});
    });
    return c;
}

#define CLIFF_INSTANTIATE(S)                                                                                 \
    template Matrix<S> bidegree_piece(const std::map<Bidegree, Matrix<S>>&, const Matrix<S>&, int, int);    \
    template bool is_pure(const std::map<Bidegree, Matrix<S>>&, const Matrix<S>&, int, int, double);        \
    template Matrix<S> rho_matrix(const Multivector<S>&);                                                    \
    template Multivector<S> pair_form<S>(const AlgebraContext&, const Tensor3<real_of<S>>&,                  \
                                         const std::vector<real_of<S>>&);                                    \
    template struct FormOperators<S>;                                                                        \
    template std::vector<Check> form_checks(const FormOperators<S>&);                                        \
    template std::vector<Check> almost_kaehler_form_checks(const FormOperators<S>&);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
