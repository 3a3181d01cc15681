#include "cliffordlab/check_util.hpp"
#include "cliffordlab/dirac.hpp"

#include <random>

namespace cliff {

namespace {

using namespace check_util;

template <class S>
S qs(const mpq_class& q) {
    return to_scalar<S>(RealTraits<real_of<S>>::from_rational(q));
}

std::string tag(const mpq_class& t) { return "[t=" + t.get_str() + "]"; }

template <class S>
Matrix<S> anticommutator_of(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b + b * a;
}

template <class S>
Multivector<S> random_mv(const AlgebraContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-2, 2), keep(0, 2);
    const S i = ScalarTraits<S>::i();
    std::vector<S> v(ctx.algebra_dim(), S(0));
    for (auto& x : v)
        if (keep(rng) == 0) x = S(coef(rng)) + S(coef(rng)) * i;
    return Multivector<S>::from_dense(ctx, v);
}

// sum_a X(v_a) . nabla_{Y(v_a)} for vector maps given per frame index
template <class S>
Matrix<S> frame_sum(const DiracOperators<S>& o, const ConnectionCalculus<S>& cc,
                    const std::function<CVector<S>(int)>& left, const std::function<CVector<S>(int)>& dir) {
    Matrix<S> out(o.dim(), o.dim());
    for (int a = 0; a < o.m(); ++a) out += o.left_mul(left(a)) * cc.nabla(dir(a));
    return out;
}

}  // namespace

template <class S>
Matrix<S> bochner_square_rhs(const DiracOperators<S>& o, const mpq_class& t) {
    ConnectionCalculus<S> cc(o, o.geo.gauduchon(t));
    const auto N = o.geo.nijenhuis();
    const auto dc = o.geo.plus(o.geo.dc_omega());
    const S ts = qs<S>(t);
    const int m = o.m();
    Matrix<S> out(o.dim(), o.dim());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto Ea = o.eps_bar_vec(a), Eb = o.eps_bar_vec(b);
            Matrix<S> inner = cc.curvature(Ea, Eb);
            // T(eb_a, eb_b) = sum_c N(eb_c, eb_a, eb_b) e_c + t dcw+(e_c, eb_a, eb_b) eb_c
            for (int c = 0; c < m; ++c) {
                auto ec = o.eps_vec(c), Ec = o.eps_bar_vec(c);
                S n = eval3(N, Ec, Ea, Eb), w = eval3(dc, ec, Ea, Eb) * ts;
                if (!ScalarTraits<S>::is_zero(n, 0)) inner -= cc.nabla(ec) * n;
                if (!ScalarTraits<S>::is_zero(w, 0)) inner -= cc.nabla(Ec) * w;
            }
            out += o.left_mul(o.eps_vec(a)) * o.left_mul(o.eps_vec(b)) * inner;
        }
    return out * rat<S>(1, 8);
}

template <class S>
Matrix<S> bochner_anticommutator_rhs(const DiracOperators<S>& o, const mpq_class& t) {
    ConnectionCalculus<S> cc(o, o.geo.gauduchon(t));
    const auto dc = o.geo.plus(o.geo.dc_omega());
    const int m = o.m();
    Matrix<S> rough(o.dim(), o.dim()), curv(o.dim(), o.dim()), tors(o.dim(), o.dim());
    for (int a = 0; a < m; ++a) rough -= cc.second(o.eps_bar_vec(a), o.eps_vec(a));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto ea = o.eps_vec(a), Ea = o.eps_bar_vec(a), eb = o.eps_vec(b);
            Matrix<S> L = o.left_mul(o.eps_bar_vec(b)) * o.left_mul(ea);
            curv += L * cc.curvature(eb, Ea);
            Matrix<S> inner(o.dim(), o.dim());
            for (int c = 0; c < m; ++c) {
                auto ec = o.eps_vec(c), Ec = o.eps_bar_vec(c);
                S w1 = eval3(dc, ec, eb, Ea), w2 = eval3(dc, Ec, eb, Ea);
                if (!ScalarTraits<S>::is_zero(w1, 0)) inner += cc.nabla(Ec) * w1;
                if (!ScalarTraits<S>::is_zero(w2, 0)) inner += cc.nabla(ec) * w2;
            }
            tors += L * inner;
        }
    // frame-free sums: one index -> 1/2, two -> 1/4, three -> 1/8
    const S tm1 = qs<S>(mpq_class(t - 1));
    Matrix<S> rhs = rough * rat<S>(1, 2) + curv * rat<S>(1, 4) - tors * (tm1 * rat<S>(1, 8));
    return rhs * S(4);
}

template <class S>
std::vector<Check> dirac_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    const S i = ScalarTraits<S>::i();
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    add("dirac.lc_forms", "D̃ = d + d*", [o, f, tol] { return eq(o->D_lc, f->d + f->d.adjoint(), tol); });
    add("dirac.lc_selfadjoint", "D̃* = D̃", [o, tol] { return eq(o->D_lc.adjoint(), o->D_lc, tol); });
    add("dirac.alpha", "Bα = −αB, D̃α = −αD̃", [o, tol] {
        const auto& al = o->sl2().alpha;
        return all_of({eq(o->B * al, -(al * o->B), tol), eq(o->D_lc * al, -(al * o->D_lc), tol)});
    });
    add("dirac.B_selfadjoint", "B* = B", [o, tol] { return eq(o->B.adjoint(), o->B, tol); });
    add("dirac.curlyB_adjoint", "𝔅* = 𝔅̄", [o, tol] { return eq(o->curly_B.adjoint(), o->curly_B_bar, tol); });
    add("dirac.kaehler_iff", "D̃ = D_t for all t ⇔ Kähler", [o, f, tol, ts] {
        bool all_equal = true;
        for (const auto& t : ts) all_equal = all_equal && (o->D_t(t) - o->D_lc).is_zero(tol);
        bool kaehler = f->integrable && f->almost_kaehler;
        return expect_true("", "", all_equal == kaehler,
                           "D_t = D̃: " + std::to_string(all_equal) + ", Kähler: " + std::to_string(kaehler));
    });

    add("dirac.derivation", "∇_v(φ·ψ) = ∇_vφ·ψ + φ·∇_vψ", [o, tol, ts] {
        const auto& ctx = o->forms->ctx();
        std::mt19937 rng(20240611u);
        std::vector<std::vector<Matrix<S>>> conns{o->nabla(o->geo.levi_civita())};
        for (const auto& t : ts) conns.push_back(o->nabla(o->geo.gauduchon(t)));
        std::uniform_int_distribution<int> pick_v(0, o->m() - 1);
        std::uniform_int_distribution<int> pick_c(0, int(conns.size()) - 1);
        for (int k = 0; k < 100; ++k) {
            auto x = random_mv<S>(ctx, rng), y = random_mv<S>(ctx, rng);
            const auto& Nv = conns[pick_c(rng)][pick_v(rng)];
            auto lhs = apply_operator(Nv, clifford_mul(x, y));
            auto rhs = clifford_mul(apply_operator(Nv, x), y) + clifford_mul(x, apply_operator(Nv, y));
            auto r = mv_eq(lhs, rhs, tol);
            if (!r.pass) return r;
        }
        return CheckResult{"", "", true, 0.0, ""};
    });

    for (const auto& t : ts) {
        const std::string tg = tag(t);
        auto Dt = std::make_shared<Matrix<S>>(ops.D_t(t));
        add("dirac.H_commutator" + tg, "[D_t, 𝓗] = −i(D_t)_c, [(D_t)_c, 𝓗] = iD_t, ᵗ-variants", [o, Dt, tol, i] {
            const auto& H = o->sl2().Hc;
            const Matrix<S>& D = *Dt;
            Matrix<S> Dc = o->c(D), Dtr = o->t(D), Dctr = o->t(Dc);
            return all_of({eq(commutator(D, H), Dc * (-i), tol), eq(commutator(Dc, H), D * i, tol),
                           eq(commutator(Dtr, H), Dctr * i, tol), eq(commutator(Dctr, H), Dtr * (-i), tol)});
        });
        add("dirac.J_commutator" + tg, "[D, 𝓙] = −iD_c, [D_c, 𝓙] = iD, [Dᵗ, 𝓙] = −iD_cᵗ, [D_cᵗ, 𝓙] = iDᵗ", [o, Dt, tol, i] {
            const auto& Jc = o->sl2().Jc;
            const Matrix<S>& D = *Dt;
            Matrix<S> Dc = o->c(D), Dtr = o->t(D), Dctr = o->t(Dc);
            return all_of({eq(commutator(D, Jc), Dc * (-i), tol), eq(commutator(Dc, Jc), D * i, tol),
                           eq(commutator(Dtr, Jc), Dctr * (-i), tol), eq(commutator(Dctr, Jc), Dtr * i, tol)});
        });
        add("dirac.Jder" + tg, "[D_t, J_der] = (D_t)_c", [o, Dt, tol] {
            return eq(commutator(*Dt, o->sl2().J_der), o->c(*Dt), tol);
        });
        add("dirac.rotated" + tg, "(D_t)_c = Σ v_a·∇_{Jv_a}", [o, Dt, t, tol] {
            ConnectionCalculus<S> cc(*o, o->geo.gauduchon(t));
            auto rot = frame_sum<S>(*o, cc, [o](int a) { return o->frame_vec(a); },
                                    [o](int a) { return o->J_vec(o->frame_vec(a)); });
            return eq(o->c(*Dt), rot, tol);
        });
        add("dirac.adjoint" + tg, "D_t* = D_t + (t+1)/2 L_θ", [o, Dt, t, tol] {
            S k = qs<S>(mpq_class((t + 1) / 2));
            return eq(Dt->adjoint(), *Dt + o->left_mul(o->theta_vec()) * k, tol);
        });
        add("dirac.c_adjoint" + tg, "(D_t)_c = (D_t)_c* + (t+1)/2 L_{Jθ}", [o, Dt, t, tol] {
            S k = qs<S>(mpq_class((t + 1) / 2));
            Matrix<S> Dc = o->c(*Dt);
            return eq(Dc, Dc.adjoint() + o->left_mul(o->J_vec(o->theta_vec())) * k, tol);
        });
        add("dirac.potential_adjoint" + tg, "D_A* = D_A + L_{r(A)}, r(A) = (t+1)/2 θ", [o, t, tol] {
            auto A = o->geo.canonical_potential(t);
            auto r = o->geo.r(A);
            CVector<S> rv(o->m());
            for (int k = 0; k < o->m(); ++k) rv[k] = to_scalar<S>(r[k]);
            Matrix<S> DA = o->D_A(t);
            auto th = o->theta_vec();
            Matrix<S> diff(o->m(), 1);
            S k = qs<S>(mpq_class((t + 1) / 2));
            for (int a = 0; a < o->m(); ++a) diff(a, 0) = rv[a] - th[a] * k;
            return all_of({eq(DA.adjoint(), DA + o->left_mul(rv), tol), zero(diff, tol),
                           eq(o->D_t(t) - o->D_lc, DA, tol)});
        });
        add("dirac.potential_forms" + tg, "D_A ≅ d_A + d_A* + r(A)⌟", [o, t, tol] {
            auto A = o->geo.canonical_potential(t);
            auto r = o->geo.r(A);
            std::vector<S> rv(o->m());
            for (int k = 0; k < o->m(); ++k) rv[k] = to_scalar<S>(r[k]);
            Matrix<S> dA = o->d_A(A);
            Matrix<S> rhs = dA + dA.adjoint() + interior_matrix(Multivector<S>::vector(o->forms->ctx(), rv));
            return eq(o->D_A(t), rhs, tol);
        });
        add("dirac.split_coord" + tg, "𝔡_t = ½(D_t + i(D_t)_c) = 2Σ ε_j·∇_{ε̄_j}", [o, Dt, t, tol] {
            ConnectionCalculus<S> cc(*o, o->geo.gauduchon(t));
            auto coord = frame_sum<S>(*o, cc, [o](int a) { return o->eps_vec(a); },
                                      [o](int a) { return o->frame_vec(a); });
            return eq(o->split(*Dt), coord, tol);
        });
        add("dirac.split_adjoint" + tg, "𝔡_t* = 𝔡̄_t + (t+1)/2 L_{(θ+iJθ)/2}", [o, Dt, t, tol, i] {
            Matrix<S> d = o->split(*Dt);
            auto th = o->theta_vec(), Jth = o->J_vec(th);
            CVector<S> v(o->m());
            for (int a = 0; a < o->m(); ++a) v[a] = (th[a] + i * Jth[a]) * rat<S>(1, 2);
            S k = qs<S>(mpq_class((t + 1) / 2));
            return eq(d.adjoint(), d.conj() + o->left_mul(v) * k, tol);
        });
        add("dirac.split_bidegree" + tg, "𝔡_t has Clifford bidegree (1,1)", [o, Dt, tol] {
            return expect_true("", "", is_pure(o->clifford_pi, o->split(*Dt), 1, 1, tol));
        });
        if (t != -1)
            add("dirac.balanced_iff" + tg, "𝔡_t* = 𝔡̄_t ⇔ θ = 0", [o, f, Dt, tol] {
                Matrix<S> d = o->split(*Dt);
                bool csa = (d.adjoint() - d.conj()).is_zero(tol);
                return expect_true("", "", csa == f->balanced);
            });
    }
    return c;
}

template <class S>
std::vector<Check> correspondence_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    const S i = ScalarTraits<S>::i();
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    for (const auto& t : ts)
        add("corr.Dt_expansion" + tag(t),
            "D_t = ∂ + ∂̄ + ∂* + ∂̄* + (t+1)/4(τ_∂ + τ̄_∂ + τ_∂* + τ̄_∂* − E_θ + I_θ) + (3t−1)/4 i(ρ_∂ − ρ̄_∂ − ρ_∂* + ρ̄_∂*)",
            [o, f, t, tol, i] {
                S k1 = qs<S>(mpq_class((t + 1) / 4));
                S k2 = qs<S>(mpq_class((3 * t - 1) / 4));
                Matrix<S> rhs = f->del + f->delbar + f->del.adjoint() + f->delbar.adjoint();
                rhs += (f->tau_del + f->tau_delbar + f->tau_del.adjoint() + f->tau_delbar.adjoint() - f->E_theta +
                        f->I_theta) * k1;
                rhs += (f->rho_del - f->rho_delbar - f->rho_del.adjoint() + f->rho_delbar.adjoint()) * (k2 * i);
                return eq(o->D_t(t), rhs, tol);
            });

    add("corr.lc", "D̃ = δ + δ̄ + δ* + δ̄*", [o, f, tol] {
        return eq(o->D_lc, f->delta + f->delta_bar + f->delta.adjoint() + f->delta_bar.adjoint(), tol);
    });
    add("corr.B", "B = ε + ∂̄̂ + ε* + ∂̄̂*", [o, f, tol] {
        return eq(o->B, f->eps + f->delbar_hat + f->eps.adjoint() + f->delbar_hat.adjoint(), tol);
    });
    add("corr.lc_c", "D̃_c = i(δ − δ̄ + δ̄* − δ*)", [o, f, tol, i] {
        return eq(o->c(o->D_lc), (f->delta - f->delta_bar + f->delta_bar.adjoint() - f->delta.adjoint()) * i, tol);
    });
    add("corr.B_c", "B_c = i(ε − ∂̄̂ + ∂̄̂* − ε*)", [o, f, tol, i] {
        return eq(o->c(o->B), (f->eps - f->delbar_hat + f->delbar_hat.adjoint() - f->eps.adjoint()) * i, tol);
    });
    add("corr.lc_t", "D̃ᵗ = dα − d*α = (δ + δ̄ − δ* − δ̄*)α", [o, f, tol] {
        const auto& al = o->sl2().alpha;
        return all_of({eq(o->t(o->D_lc), (f->d - f->d.adjoint()) * al, tol),
                       eq(o->t(o->D_lc),
                          (f->delta + f->delta_bar - f->delta.adjoint() - f->delta_bar.adjoint()) * al, tol)});
    });
    add("corr.B_t", "Bᵗ = (ε + ∂̄̂ − ε* − ∂̄̂*)α", [o, f, tol] {
        const auto& al = o->sl2().alpha;
        return eq(o->t(o->B), (f->eps + f->delbar_hat - f->eps.adjoint() - f->delbar_hat.adjoint()) * al, tol);
    });
    add("corr.lc_t_commute", "[D̃, D̃ᵗ] = [D̃_c, D̃_cᵗ] = 0", [o, tol] {
        Matrix<S> Dc = o->c(o->D_lc);
        return all_of({zero(commutator(o->D_lc, o->t(o->D_lc)), tol), zero(commutator(Dc, o->t(Dc)), tol)});
    });
    if (f->integrable && f->almost_kaehler)
        add("corr.B_t_commute", "[B, Bᵗ] = [B_c, B_cᵗ] = 0 (Kähler)", [o, tol] {
            Matrix<S> Bc = o->c(o->B);
            return all_of({zero(commutator(o->B, o->t(o->B)), tol), zero(commutator(Bc, o->t(Bc)), tol)});
        });

    add("corr.B_sl2", "{𝓛+𝓛̄, B} = Bᵗ, {𝓛−𝓛̄, B} = −iB_cᵗ, {𝓛+𝓛̄, Bᵗ} = B, {𝓛−𝓛̄, Bᵗ} = iB_c, {𝓛+𝓛̄, B_c} = B_cᵗ, {𝓛−𝓛̄, B_c} = iBᵗ",
        [o, tol, i] {
            const auto& s = o->sl2();
            Matrix<S> P = s.Lc + s.Lc_bar, M = s.Lc - s.Lc_bar;
            Matrix<S> B = o->B, Bt = o->t(B), Bc = o->c(B), Bct = o->t(Bc);
            return all_of({eq(anticommutator_of(P, B), Bt, tol), eq(anticommutator_of(M, B), Bct * (-i), tol),
                           eq(anticommutator_of(P, Bt), B, tol), eq(anticommutator_of(M, Bt), Bc * i, tol),
                           eq(anticommutator_of(P, Bc), Bct, tol), eq(anticommutator_of(M, Bc), Bt * i, tol)});
        });

    add("corr.curlyD", "𝔇 = δ̄ + δ*, 𝔇̄ = δ + δ̄*, 𝔇ᵗ = δ̄α − δ*α, 𝔇̄ᵗ = δα − δ̄*α", [o, f, tol] {
        const auto& al = o->sl2().alpha;
        return all_of({eq(o->curly_D, f->delta_bar + f->delta.adjoint(), tol),
                       eq(o->curly_D_bar, f->delta + f->delta_bar.adjoint(), tol),
                       eq(o->t(o->curly_D), (f->delta_bar - f->delta.adjoint()) * al, tol),
                       eq(o->t(o->curly_D_bar), (f->delta - f->delta_bar.adjoint()) * al, tol)});
    });
    add("corr.curlyB", "𝔅 = ∂̄̂ + ε*, 𝔅̄ = ε + ∂̄̂*, 𝔅ᵗ = ∂̄̂α − ε*α, 𝔅̄ᵗ = εα − ∂̄̂*α", [o, f, tol] {
        const auto& al = o->sl2().alpha;
        return all_of({eq(o->curly_B, f->delbar_hat + f->eps.adjoint(), tol),
                       eq(o->curly_B_bar, f->eps + f->delbar_hat.adjoint(), tol),
                       eq(o->t(o->curly_B), (f->delbar_hat - f->eps.adjoint()) * al, tol),
                       eq(o->t(o->curly_B_bar), (f->eps - f->delbar_hat.adjoint()) * al, tol)});
    });
    add("corr.conjugation", "c 𝔇 c = 𝔇̄, c 𝔅 c = 𝔅̄, c 𝔅ᵗ c = 𝔅̄ᵗ", [o, tol, i] {
        auto bar = [o, i](const Matrix<S>& D) { return (D - o->c(D) * i) * rat<S>(1, 2); };
        return all_of({eq(o->curly_D.conj(), bar(o->D_lc), tol), eq(o->curly_B.conj(), bar(o->B), tol),
                       eq(o->t(o->curly_B).conj(), o->t(bar(o->B)), tol)});
    });
    return c;
}

template <class S>
std::vector<Check> laplacian_checks(const DiracOperators<S>& ops) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    add("lap.delta_anticommute", "{δ, δ̄} = 0", [f, tol] { return zero(anticommutator_of(f->delta, f->delta_bar), tol); });
    add("lap.curlyD", "Δ_𝔇 = Δ_{𝔇ᵗ} = Δ_δ + Δ_δ̄", [o, f, tol] {
        Matrix<S> L = laplacian(o->curly_D);
        return all_of({eq(L, laplacian(o->t(o->curly_D)), tol),
                       eq(L, laplacian(f->delta) + laplacian(f->delta_bar), tol)});
    });
    add("lap.curlyB", "Δ_𝔅 + Δ_{𝔅ᵗ} = 2(Δ_ε + Δ_∂̄̂)", [o, f, tol] {
        return eq(laplacian(o->curly_B) + laplacian(o->t(o->curly_B)),
                  (laplacian(f->eps) + laplacian(f->delbar_hat)) * S(2), tol);
    });
    if (f->integrable && f->almost_kaehler)
        add("lap.curlyB_kaehler", "Δ_𝔅 = Δ_{𝔅ᵗ} (Kähler)", [o, tol] {
            return eq(laplacian(o->curly_B), laplacian(o->t(o->curly_B)), tol);
        });
    add("lap.curlyB_sl2", "{𝔅, 𝓛} = 0, {𝔅̄, 𝓛̄} = 0, {𝔅, 𝓛̄} = 𝔅ᵗ, {𝔅̄, 𝓛} = 𝔅̄ᵗ, [𝓗, 𝔅] = 𝔅", [o, tol] {
        const auto& s = o->sl2();
        const auto &B = o->curly_B, &Bb = o->curly_B_bar;
        return all_of({zero(anticommutator_of(B, s.Lc), tol), zero(anticommutator_of(Bb, s.Lc_bar), tol),
                       eq(anticommutator_of(B, s.Lc_bar), o->t(B), tol),
                       eq(anticommutator_of(Bb, s.Lc), o->t(Bb), tol), eq(commutator(s.Hc, B), B, tol)});
    });
    add("lap.laplacian_B_sl2",
        "[𝓗, Δ_𝔅] = [𝓗, Δ_{𝔅ᵗ}] = 0, [𝓛, Δ_𝔅] = [𝔅̄ᵗ, 𝔅], [𝓛, Δ_{𝔅ᵗ}] = [𝔅, 𝔅̄ᵗ], [𝓛̄, Δ_𝔅] = [𝔅ᵗ, 𝔅̄], [𝓛̄, Δ_{𝔅ᵗ}] = [𝔅̄, 𝔅ᵗ]",
        [o, tol] {
            const auto& s = o->sl2();
            const auto &B = o->curly_B, &Bb = o->curly_B_bar;
            Matrix<S> Bt = o->t(B), Bbt = o->t(Bb);
            Matrix<S> LB = laplacian(B), LBt = laplacian(Bt);
            return all_of({zero(commutator(s.Hc, LB), tol), zero(commutator(s.Hc, LBt), tol),
                           eq(commutator(s.Lc, LB), commutator(Bbt, B), tol),
                           eq(commutator(s.Lc, LBt), commutator(B, Bbt), tol),
                           eq(commutator(s.Lc_bar, LB), commutator(Bt, Bb), tol),
                           eq(commutator(s.Lc_bar, LBt), commutator(Bb, Bt), tol)});
        });
    return c;
}

template <class S>
std::vector<Check> bochner_checks(const DiracOperators<S>& ops, const std::vector<mpq_class>& ts) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    for (const auto& t : ts) {
        const std::string tg = tag(t);
        add("bochner.curvature" + tg, "R(X,Y) = ∇_{X,Y} − ∇_{Y,X} + ∇_{T(X,Y)}", [o, t, tol] {
            ConnectionCalculus<S> cc(*o, o->geo.gauduchon(t));
            std::vector<CheckResult> parts;
            // bilinear, so the real frame suffices
            for (int a = 0; a < o->m(); ++a)
                for (int b = a + 1; b < o->m(); ++b) {
                    auto X = o->frame_vec(a), Y = o->frame_vec(b);
                    Matrix<S> rhs = cc.second(X, Y) - cc.second(Y, X) + cc.nabla(cc.torsion(X, Y));
                    parts.push_back(eq(cc.curvature(X, Y), rhs, tol));
                    parts.push_back(eq(cc.curvature(X, Y), cc.curvature_direct(X, Y), tol));
                }
            return all_of(parts);
        });
        add("bochner.torsion_slots" + tg, "T^t(ε̄_j,ε̄_k) = Σ N(ε̄_i,ε̄_j,ε̄_k)ε_i + t d_cω⁺(ε_i,ε̄_j,ε̄_k)ε̄_i", [o, t, tol] {
            const auto T = o->geo.torsion(o->geo.gauduchon(t));
            const auto N = o->geo.nijenhuis();
            const auto dc = o->geo.plus(o->geo.dc_omega());
            const S ts = qs<S>(t);
            const int m = o->m();
            Matrix<S> diff(std::size_t(m) * m, std::size_t(2 * m));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < m; ++k) {
                        auto Ei = o->eps_bar_vec(i), ei = o->eps_vec(i), Ej = o->eps_bar_vec(j),
                             Ek = o->eps_bar_vec(k);
                        diff(std::size_t(j) * m + k, i) = eval3(T, Ei, Ej, Ek) - eval3(N, Ei, Ej, Ek);
                        diff(std::size_t(j) * m + k, m + i) = eval3(T, ei, Ej, Ek) - eval3(dc, ei, Ej, Ek) * ts;
                    }
            return zero(diff, tol);
        });
        add("bochner.square" + tg,
            "¼𝔡_t² = Σ_{j<k} ε_j·ε_k·(R^t(ε̄_j,ε̄_k) − Σ_i N(ε̄_i,ε̄_j,ε̄_k)∇_{ε_i} − t d_cω⁺(ε_i,ε̄_j,ε̄_k)∇_{ε̄_i})",
            [o, t, tol] {
                Matrix<S> d = o->split(o->D_t(t));
                return eq(d * d * rat<S>(1, 4), bochner_square_rhs(*o, t), tol);
            });
        add("bochner.anticommutator" + tg,
            "¼(𝔡_t𝔡̄_t + 𝔡̄_t𝔡_t) = ∇*∇_t + 𝓡_t − (t−1)/2 Σ ε̄_k·ε_j·(d_cω⁺(ε_i,ε_k,ε̄_j)∇_{ε̄_i} + d_cω⁺(ε̄_i,ε_k,ε̄_j)∇_{ε_i})",
            [o, t, tol] {
                Matrix<S> d = o->split(o->D_t(t));
                return eq(anticommutator_of(d, d.conj()), bochner_anticommutator_rhs(*o, t), tol);
            });
        add("bochner.anticommutator_torsion" + tg,
            "¼(𝔡_t𝔡̄_t + 𝔡̄_t𝔡_t) = −Σ_j ∇_{ε̄_j,ε_j} + Σ_{j,k} ε̄_k·ε_j·(R^t(ε_k,ε̄_j) − ∇_{T^t(ε_k,ε̄_j)})",
            [o, t, tol] {
                ConnectionCalculus<S> cc(*o, o->geo.gauduchon(t));
                Matrix<S> rhs(o->dim(), o->dim());
                for (int a = 0; a < o->m(); ++a) rhs -= cc.second(o->eps_bar_vec(a), o->eps_vec(a)) * rat<S>(1, 2);
                for (int a = 0; a < o->m(); ++a)
                    for (int b = 0; b < o->m(); ++b) {
                        auto eb = o->eps_vec(b), Ea = o->eps_bar_vec(a);
                        rhs += o->left_mul(o->eps_bar_vec(b)) * o->left_mul(o->eps_vec(a)) *
                               (cc.curvature(eb, Ea) - cc.nabla(cc.torsion(eb, Ea))) * rat<S>(1, 4);
                    }
                Matrix<S> d = o->split(o->D_t(t));
                return eq(anticommutator_of(d, d.conj()) * rat<S>(1, 4), rhs, tol);
            });
        if (f->integrable && f->almost_kaehler)
            add("bochner.differential" + tg, "𝔡_t² = 0 (Kähler)", [o, t, tol] {
                Matrix<S> d = o->split(o->D_t(t));
                return zero(d * d, tol);
            });
    }
    if (f->integrable && f->almost_kaehler)
        add("bochner.chern_differential", "d_cω = 0, N = 0 ⇒ 𝔡_1² = 0", [o, tol] {
            Matrix<S> d = o->split(o->D_t(mpq_class(1)));
            return zero(d * d, tol);
        });
    return c;
}

template <class S>
std::vector<Check> almost_kaehler_dirac_checks(const DiracOperators<S>& ops) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    const S i = ScalarTraits<S>::i();
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    add("akd.lc_H_commutator", "[D̃, 𝓗] = −iD̃_c, [D̃_c, 𝓗] = iD̃, [D̃ᵗ, 𝓗] = iD̃_cᵗ, [D̃_cᵗ, 𝓗] = −iD̃ᵗ", [o, tol, i] {
        const auto& H = o->sl2().Hc;
        const Matrix<S>& D = o->D_lc;
        Matrix<S> Dc = o->c(D), Dt = o->t(D), Dct = o->t(Dc);
        return all_of({eq(commutator(D, H), Dc * (-i), tol), eq(commutator(Dc, H), D * i, tol),
                       eq(commutator(Dt, H), Dct * i, tol), eq(commutator(Dct, H), Dt * (-i), tol)});
    });
    add("akd.c_t", "[D̃_c, D̃ᵗ] = [D̃, D̃_cᵗ]", [o, tol] {
        Matrix<S> Dc = o->c(o->D_lc);
        return eq(commutator(Dc, o->t(o->D_lc)), commutator(o->D_lc, o->t(Dc)), tol);
    });
    add("akd.lc_sl2", "{𝓛+𝓛̄, D̃} = D̃ᵗ, {𝓛−𝓛̄, D̃} = −iD̃_cᵗ, {𝓛+𝓛̄, D̃ᵗ} = D̃, {𝓛−𝓛̄, D̃ᵗ} = iD̃_c, {𝓛+𝓛̄, D̃_c} = D̃_cᵗ, {𝓛−𝓛̄, D̃_c} = iD̃ᵗ",
        [o, tol, i] {
            const auto& s = o->sl2();
            Matrix<S> P = s.Lc + s.Lc_bar, M = s.Lc - s.Lc_bar;
            Matrix<S> D = o->D_lc, Dt = o->t(D), Dc = o->c(D), Dct = o->t(Dc);
            return all_of({eq(anticommutator_of(P, D), Dt, tol), eq(anticommutator_of(M, D), Dct * (-i), tol),
                           eq(anticommutator_of(P, Dt), D, tol), eq(anticommutator_of(M, Dt), Dc * i, tol),
                           eq(anticommutator_of(P, Dc), Dct, tol), eq(anticommutator_of(M, Dc), Dt * i, tol)});
        });
    add("akd.curlyD_sl2", "{𝔇, 𝓛} = 0, {𝔇̄, 𝓛̄} = 0, {𝔇, 𝓛̄} = 𝔇ᵗ, {𝔇̄, 𝓛} = 𝔇̄ᵗ, [𝓗, 𝔇] = 𝔇", [o, tol] {
        const auto& s = o->sl2();
        const auto &D = o->curly_D, &Db = o->curly_D_bar;
        return all_of({zero(anticommutator_of(D, s.Lc), tol), zero(anticommutator_of(Db, s.Lc_bar), tol),
                       eq(anticommutator_of(D, s.Lc_bar), o->t(D), tol),
                       eq(anticommutator_of(Db, s.Lc), o->t(Db), tol), eq(commutator(s.Hc, D), D, tol)});
    });
    add("akd.laplacian_D_sl2", "[𝓗, Δ_𝔇] = [𝓛, Δ_𝔇] = [𝓛̄, Δ_𝔇] = 0", [o, tol] {
        const auto& s = o->sl2();
        Matrix<S> L = laplacian(o->curly_D);
        return all_of({zero(commutator(s.Hc, L), tol), zero(commutator(s.Lc, L), tol),
                       zero(commutator(s.Lc_bar, L), tol)});
    });
    add("akd.Delta", "Δ_δ = Δ_δ̄, Δ_𝔇 = 2Δ_δ", [o, f, tol] {
        return all_of({eq(laplacian(f->delta), laplacian(f->delta_bar), tol),
                       eq(laplacian(o->curly_D), laplacian(f->delta) * S(2), tol)});
    });
    return c;
}

#define CLIFF_INSTANTIATE(S)                                                                                  \
    template Matrix<S> bochner_square_rhs(const DiracOperators<S>&, const mpq_class&);                       \
    template Matrix<S> bochner_anticommutator_rhs(const DiracOperators<S>&, const mpq_class&);               \
    template std::vector<Check> dirac_checks(const DiracOperators<S>&, const std::vector<mpq_class>&);       \
    template std::vector<Check> correspondence_checks(const DiracOperators<S>&, const std::vector<mpq_class>&); \
    template std::vector<Check> laplacian_checks(const DiracOperators<S>&);                                  \
    template std::vector<Check> bochner_checks(const DiracOperators<S>&, const std::vector<mpq_class>&);     \
    template std::vector<Check> almost_kaehler_dirac_checks(const DiracOperators<S>&);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
