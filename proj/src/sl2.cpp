#include "cliffordlab/sl2.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace cliff {

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

std::vector<int> symmetric_range(int n) {
    std::vector<int> v;
    for (int s = -n; s <= n; ++s) v.push_back(s);
    return v;
}

}  // namespace

template <class S>
Multivector<S> fundamental_form(const AlgebraContext& ctx) {
    Multivector<S> w(ctx);
    for (int a = 0; a < ctx.dim(); ++a) {
        auto v = Multivector<S>::vector(ctx, a);
        w += wedge(v, apply_J(v));
    }
    return w * rat<S>(1, 2);
}

template <class S>
void build_L_bar_L_H(const AlgebraContext& ctx, Sl2Operators<S>& ops) {
    // sum_k eps_k (x) epsbar_k = (1/2) sum_a eps(v_a) (x) v_a for any orthonormal frame
    std::size_t N = ctx.algebra_dim();
    Matrix<S> L(N, N), Lb(N, N);
    for (int a = 0; a < ctx.dim(); ++a) {
        auto v = Multivector<S>::vector(ctx, a);
        Matrix<S> R = right_mul_matrix(v);
        L += left_mul_matrix(epsilon(v)) * R;
        Lb += left_mul_matrix(epsilon_bar(v)) * R;
    }
    ops.Lc = L * rat<S>(-1, 2);
    ops.Lc_bar = Lb * rat<S>(-1, 2);
    ops.Hc = commutator(ops.Lc, ops.Lc_bar);
}

template <class S>
void build_J_operators(const AlgebraContext& ctx, Sl2Operators<S>& ops) {
    ops.J_alg = J_alg_matrix<S>(ctx);
    auto inv = inverse(ops.J_alg, 1e-12);
    if (!inv) throw std::runtime_error("J_alg is not invertible");
    ops.J_alg_inv = *inv;
    ops.J_der = J_der_matrix<S>(ctx);
    ops.Jc = ops.J_der * (-ScalarTraits<S>::i());
}

template <class S>
void build_exterior_LLambdaH(const AlgebraContext& ctx, Sl2Operators<S>& ops) {
    ops.omega = fundamental_form<S>(ctx);
    ops.omega0 = ops.omega * (S(1) / (rat<S>(2) * ScalarTraits<S>::i()));
    ops.L = wedge_matrix(ops.omega);
    ops.Lambda = ops.L.adjoint();
    std::size_t N = ctx.algebra_dim();
    ops.H = Matrix<S>(N, N);
    for (Blade b = 0; b < N; ++b) ops.H(b, b) = rat<S>(ctx.n() - grade(b));
}

template <class S>
Sl2Operators<S> build_sl2(const AlgebraContext& ctx) {
    Sl2Operators<S> ops(ctx);
    build_L_bar_L_H(ctx, ops);
    build_J_operators(ctx, ops);
    build_exterior_LLambdaH(ctx, ops);
    ops.alpha = alpha_matrix<S>(ctx);
    ops.trs = transpose_matrix<S>(ctx);
    return ops;
}

template <class S>
Matrix<S> eigen_projector(const Matrix<S>& T, int value, const std::vector<int>& spectrum) {
    std::size_t N = T.rows();
    Matrix<S> P = Matrix<S>::identity(N);
    S denom(1);
    for (int s : spectrum) {
        if (s == value) continue;
        P = P * (T - Matrix<S>::identity(N) * rat<S>(s));
        denom *= rat<S>(value - s);
    }
    return P * (S(1) / denom);
}

template <class S>
std::map<int, Matrix<S>> spectral_projectors(const Matrix<S>& T, int n, double tol) {
    // prefix/suffix products share work across the 2n+1 Lagrange numerators
    auto spec = symmetric_range(n);
    std::size_t m = spec.size(), N = T.rows();
    Matrix<S> I = Matrix<S>::identity(N);
    std::vector<Matrix<S>> factor, prefix(m + 1), suffix(m + 1);
    for (int s : spec) factor.push_back(T - I * rat<S>(s));
    prefix[0] = I;
    for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * factor[k];
    suffix[m] = I;
    for (std::size_t k = m; k-- > 0;) suffix[k] = factor[k] * suffix[k + 1];
    std::map<int, Matrix<S>> out;
    Matrix<S> total(N, N);
    for (std::size_t k = 0; k < m; ++k) {
        S denom(1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) denom *= rat<S>(spec[k] - spec[j]);
        Matrix<S> P = prefix[k] * suffix[k + 1] * (S(1) / denom);
        if (P.is_zero(tol)) continue;
        if (!(T * P - P * rat<S>(spec[k])).is_zero(tol))
            throw std::runtime_error("operator is not diagonalizable over the integer spectrum");
        total += P;
        out.emplace(spec[k], std::move(P));
    }
    if (!(total - I).is_zero(tol)) throw std::runtime_error("eigenprojectors do not resolve the identity");
    return out;
}

template <class S>
std::map<Bidegree, Matrix<S>> form_bidegree_projectors(const Sl2Operators<S>& ops, double tol) {
    const int n = ops.ctx->n();
    auto PJ = spectral_projectors(ops.Jc, n, tol);
    std::map<Bidegree, Matrix<S>> out;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            auto it = PJ.find(q - p);
            Matrix<S> Pi = degree_projector<S>(*ops.ctx, p + q);
            out.emplace(Bidegree{p, q}, it == PJ.end() ? Matrix<S>(ops.dim(), ops.dim()) : Pi * it->second);
        }
    return out;
}

template <class S>
std::map<Bidegree, Matrix<S>> clifford_bidegree_projectors(const Matrix<S>& Jc, const Matrix<S>& Hc, int n,
                                                           double tol) {
    auto PJ = spectral_projectors(Jc, n, tol);
    auto PH = spectral_projectors(Hc, n, tol);
    std::map<Bidegree, Matrix<S>> out;
    for (const auto& [r, A] : PJ)
        for (const auto& [s, B] : PH) {
            Matrix<S> P = A * B;
            if (!P.is_zero(tol)) out.emplace(Bidegree{r, s}, std::move(P));
        }
    return out;
}

template <class S>
BidegreeTable<S> bidegree_decompose(const Sl2Operators<S>& ops, double tol) {
    BidegreeTable<S> t;
    for (const auto& [rs, P] : clifford_bidegree_projectors(ops.Jc, ops.Hc, ops.ctx->n(), tol))
        t.clifford.emplace(rs, column_basis(P, tol));
    for (const auto& [pq, P] : form_bidegree_projectors(ops, tol)) t.forms.emplace(pq, column_basis(P, tol));
    return t;
}

template <class S>
std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Matrix<S>& H, const Matrix<S>& Hc, int n, double tol) {
    std::size_t N = H.rows();
    Matrix<S> eH(N, N), eHinv(N, N), eC(N, N), eCinv(N, N);
    for (const auto& [h, P] : spectral_projectors(H, n, tol)) {
        eH += P * ScalarTraits<S>::root8(h);
        eHinv += P * ScalarTraits<S>::root8(-h);
    }
    for (const auto& [s, P] : spectral_projectors(Hc, n, tol)) {
        eC += P * ScalarTraits<S>::root8(s);
        eCinv += P * ScalarTraits<S>::root8(-s);
    }
    return {eH * eC, eCinv * eHinv};
}

template <class S>
std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Sl2Operators<S>& ops, double tol) {
    return hodge_automorphism(ops.H, ops.Hc, ops.ctx->n(), tol);
}

template <class S>
std::vector<Check> sl2_checks(const Sl2Operators<S>& ops, double tol) {
    const auto* o = &ops;
    std::vector<Check> c;
    c.push_back({"sl2.L_Lbar", "[𝓛,𝓛̄] = 𝓗 with 𝓗φ = ω₀φ + φω₀", [o, tol] {
                     Matrix<S> H = left_mul_matrix(o->omega0) + right_mul_matrix(o->omega0);
                     return compare("", "", commutator(o->Lc, o->Lc_bar), H, tol);
                 }});
    c.push_back({"sl2.H_L", "[𝓗,𝓛] = 2𝓛",
                 [o, tol] { return compare("", "", commutator(o->Hc, o->Lc), o->Lc * rat<S>(2), tol); }});
    c.push_back({"sl2.H_Lbar", "[𝓗,𝓛̄] = −2𝓛̄",
                 [o, tol] { return compare("", "", commutator(o->Hc, o->Lc_bar), o->Lc_bar * rat<S>(-2), tol); }});
    return c;
}

template <class S>
std::vector<Check> correspondence_checks(const Sl2Operators<S>& ops, double tol) {
    const auto* o = &ops;
    const S i = ScalarTraits<S>::i();
    std::vector<Check> c;
    c.push_back({"corr.H", "𝓗 = i(Λ − L)",
                 [o, tol, i] { return compare("", "", o->Hc, (o->Lambda - o->L) * i, tol); }});
    c.push_back({"corr.sum", "𝓛 + 𝓛̄ = αH",
                 [o, tol] { return compare("", "", o->Lc + o->Lc_bar, o->alpha * o->H, tol); }});
    c.push_back({"corr.diff", "𝓛 − 𝓛̄ = −iα(Λ + L)", [o, tol, i] {
                     return compare("", "", o->Lc - o->Lc_bar, o->alpha * (o->Lambda + o->L) * (-i), tol);
                 }});
    return c;
}

template <class S>
std::vector<Check> bigrading_checks(const Sl2Operators<S>& ops, double tol) {
    const auto* o = &ops;
    std::vector<Check> c;
    c.push_back({"bigrading.J_formula", "𝓙φ = ω₀φ − φω₀", [o, tol] {
                     return compare("", "", o->Jc, left_mul_matrix(o->omega0) - right_mul_matrix(o->omega0), tol);
                 }});
    c.push_back({"bigrading.J_commutes", "[𝓙,𝓛] = [𝓙,𝓛̄] = [𝓙,𝓗] = 0", [o, tol] {
                     Matrix<S> r = commutator(o->Jc, o->Lc);
                     Matrix<S> r2 = commutator(o->Jc, o->Lc_bar);
                     Matrix<S> r3 = commutator(o->Jc, o->Hc);
                     auto a = expect_zero("", "", r, tol), b = expect_zero("", "", r2, tol),
                          d = expect_zero("", "", r3, tol);
                     return CheckResult{"", "", a.pass && b.pass && d.pass,
                                        std::max({a.residual, b.residual, d.residual}), ""};
                 }});
    c.push_back({"bigrading.clifford_dims", "Σ dim ℂl^{r,s} = 4^n, ℂl^{r,s} = 0 off parity and range", [o, tol] {
                     int n = o->ctx->n();
                     auto P = clifford_bidegree_projectors(o->Jc, o->Hc, n, tol);
                     std::size_t total = 0;
                     bool ok = true;
                     std::string detail;
                     for (const auto& [rs, M] : P) {
                         auto [r, s] = rs;
                         std::size_t d = rank(M, tol);
                         total += d;
                         if (((r + s - n) % 2 + 2) % 2 != 0 || std::abs(r) > n || std::abs(s) > n) {
                             ok = false;
                             detail += "nonzero at (" + std::to_string(r) + "," + std::to_string(s) + ") ";
                         }
                     }
                     if (total != o->dim()) {
                         ok = false;
                         detail += "total " + std::to_string(total);
                     }
                     return expect_true("", "", ok, detail);
                 }});
    c.push_back({"bigrading.form_dims", "dim Λ^{p,q} = C(n,p)C(n,q)", [o, tol] {
                     int n = o->ctx->n();
                     bool ok = true;
                     std::string detail;
                     for (const auto& [pq, M] : form_bidegree_projectors(*o, tol)) {
                         auto [p, q] = pq;
                         std::size_t d = rank(M, tol);
                         if (long(d) != binom(n, p) * binom(n, q)) {
                             ok = false;
                             detail += "(" + std::to_string(p) + "," + std::to_string(q) + ")=" + std::to_string(d) + " ";
                         }
                     }
                     return expect_true("", "", ok, detail);
                 }});
    c.push_back({"bigrading.g_transport", "g⁻¹ ℂl^{q−p,n−p−q} = Λ^{p,q}", [o, tol] {
                     int n = o->ctx->n();
                     auto [g, ginv] = hodge_automorphism(*o, tol);
                     auto cl = clifford_bidegree_projectors(o->Jc, o->Hc, n, tol);
                     bool ok = true;
                     std::string detail;
                     for (const auto& [pq, M] : form_bidegree_projectors(*o, tol)) {
                         auto [p, q] = pq;
                         auto it = cl.find({q - p, n - p - q});
                         Matrix<S> img = it == cl.end() ? Matrix<S>(o->dim(), 0) : ginv * column_basis(it->second, tol);
                         if (!same_span(img, column_basis(M, tol), tol)) {
                             ok = false;
                             detail += "(" + std::to_string(p) + "," + std::to_string(q) + ") ";
                         }
                     }
                     return expect_true("", "", ok, detail);
                 }});
    return c;
}

template <class S>
std::vector<Check> hodge_aut_checks(const Sl2Operators<S>& ops, double tol) {
    const auto* o = &ops;
    std::vector<Check> c;
    auto gh = std::make_shared<std::pair<Matrix<S>, Matrix<S>>>(hodge_automorphism(ops, tol));
    auto ensure = [gh] { return *gh; };
    c.push_back({"hodge.H", "g H g⁻¹ = 𝓗", [o, tol, ensure] {
                     auto [g, gi] = ensure();
                     return compare("", "", g * o->H * gi, o->Hc, tol);
                 }});
    c.push_back({"hodge.Lambda", "g Λ g⁻¹ = α𝓛", [o, tol, ensure] {
                     auto [g, gi] = ensure();
                     return compare("", "", g * o->Lambda * gi, o->alpha * o->Lc, tol);
                 }});
    c.push_back({"hodge.L", "g L g⁻¹ = α𝓛̄", [o, tol, ensure] {
                     auto [g, gi] = ensure();
                     return compare("", "", g * o->L * gi, o->alpha * o->Lc_bar, tol);
                 }});
    return c;
}

template <class S>
Report verify_correspondences(const Sl2Operators<S>& ops, double tol) {
    return run_checks("correspondence", correspondence_checks(ops, tol));
}

#define CLIFF_INSTANTIATE(S)                                                                               \
    template struct Sl2Operators<S>;                                                                       \
    template Multivector<S> fundamental_form<S>(const AlgebraContext&);                                    \
    template void build_L_bar_L_H(const AlgebraContext&, Sl2Operators<S>&);                                \
    template void build_J_operators(const AlgebraContext&, Sl2Operators<S>&);                              \
    template void build_exterior_LLambdaH(const AlgebraContext&, Sl2Operators<S>&);                        \
    template Sl2Operators<S> build_sl2<S>(const AlgebraContext&);                                          \
    template Matrix<S> eigen_projector(const Matrix<S>&, int, const std::vector<int>&);                     \
    template std::map<int, Matrix<S>> spectral_projectors(const Matrix<S>&, int, double);                  \
    template std::map<Bidegree, Matrix<S>> form_bidegree_projectors(const Sl2Operators<S>&, double);       \
    template std::map<Bidegree, Matrix<S>> clifford_bidegree_projectors(const Matrix<S>&, const Matrix<S>&, \
                                                                        int, double);                      \
    template BidegreeTable<S> bidegree_decompose(const Sl2Operators<S>&, double);                          \
    template std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Sl2Operators<S>&, double);           \
    template std::pair<Matrix<S>, Matrix<S>> hodge_automorphism(const Matrix<S>&, const Matrix<S>&, int,   \
                                                                double);                                   \
    template std::vector<Check> sl2_checks(const Sl2Operators<S>&, double);                                \
    template std::vector<Check> correspondence_checks(const Sl2Operators<S>&, double);                     \
    template std::vector<Check> bigrading_checks(const Sl2Operators<S>&, double);                          \
    template std::vector<Check> hodge_aut_checks(const Sl2Operators<S>&, double);                          \
    template Report verify_correspondences(const Sl2Operators<S>&, double);

CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
