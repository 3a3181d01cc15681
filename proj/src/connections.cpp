#include "cliffordlab/connections.hpp"

#include "cliffordlab/sl2.hpp"

#include <cmath>
#include <memory>
#include <random>

namespace cliff {

namespace {

template <class S> real_of<S> real_part(const S& x);
template <> mpq_class real_part<ExactScalar>(const ExactScalar& x) {
    if (!x.is_rational()) throw std::invalid_argument("expected a rational coefficient, got " + x.str());
    return x.a();
}
template <> double real_part<FloatScalar>(const FloatScalar& x) { return x.real(); }

template <class R> R rr(const mpq_class& q) { return RealTraits<R>::from_rational(q); }
template <class R> R rr(long p, long q) { return RealTraits<R>::from_rational(mpq_class(p, q)); }

}  // namespace

template <> ExactScalar to_scalar<ExactScalar>(const mpq_class& x) { return ExactScalar(x); }
template <> FloatScalar to_scalar<FloatScalar>(const double& x) { return {x, 0.0}; }

// Tensor3 ---------------------------------------------------------------

template <class R>
Tensor3<R>& Tensor3<R>::operator+=(const Tensor3& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

template <class R>
Tensor3<R>& Tensor3<R>::operator-=(const Tensor3& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

template <class R>
Tensor3<R>& Tensor3<R>::operator*=(const R& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

template <class R>
bool Tensor3<R>::is_zero(double tol) const {
    for (const auto& x : data_)
        if (!RealTraits<R>::is_zero(x, tol)) return false;
    return true;
}

template <class R>
double Tensor3<R>::max_abs() const {
    double m = 0;
    for (const auto& x : data_) m = std::max(m, std::abs(RealTraits<R>::to_double(x)));
    return m;
}

template <class R>
bool Tensor3<R>::skew_in_last_two(double tol) const {
    for (int a = 0; a < m_; ++a)
        for (int b = 0; b < m_; ++b)
            for (int c = 0; c < m_; ++c)
                if (!RealTraits<R>::is_zero((*this)(a, b, c) + (*this)(a, c, b), tol)) return false;
    return true;
}

// Geometry ---------------------------------------------------------------

template <class R>
Geometry<R>::Geometry(const LieModel& mdl) : model(&mdl), m(mdl.dim()), J(std::size_t(m) * m), c(m) {
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) J[std::size_t(k) * m + j] = rr<R>(mdl.J()[k][j]);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c(k, i, j) = rr<R>(mdl.c(k, i, j));
}

template <class R>
Tensor3<R> Geometry<R>::with_J(const Tensor3<R>& phi, bool x, bool y, bool z) const {
    Tensor3<R> cur = phi;
    const bool flags[3] = {x, y, z};
    for (int slot = 0; slot < 3; ++slot) {
        if (!flags[slot]) continue;
        Tensor3<R> next(m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int cc = 0; cc < m; ++cc) {
                    R acc = 0;
                    int idx[3] = {a, b, cc};
                    const int fixed = idx[slot];
                    for (int p = 0; p < m; ++p) {
                        const R& j = Jkj(p, fixed);
                        if (RealTraits<R>::is_zero(j, 0)) continue;
                        idx[slot] = p;
                        acc += j * cur(idx[0], idx[1], idx[2]);
                    }
                    next(a, b, cc) = acc;
                }
        cur = std::move(next);
    }
    return cur;
}

template <class R>
Tensor3<R> Geometry<R>::P(const Tensor3<R>& phi) const {
    Tensor3<R> out(m);
    const R third = rr<R>(1, 3);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) out(a, b, cc) = third * (phi(a, b, cc) + phi(b, cc, a) + phi(cc, a, b));
    return out;
}

template <class R>
std::vector<R> Geometry<R>::r(const Tensor3<R>& phi) const {
    std::vector<R> out(m, R(0));
    for (int x = 0; x < m; ++x)
        for (int j = 0; j < m; ++j) out[x] += phi(j, j, x);
    return out;
}

template <class R>
Tensor3<R> Geometry<R>::i(const std::vector<R>& f) const {
    Tensor3<R> out(m);
    const R s = rr<R>(1, m - 1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) {
                R v = 0;
                if (a == b) v += f[cc];
                if (cc == a) v -= f[b];
                out(a, b, cc) = s * v;
            }
    return out;
}

template <class R>
Tensor3<R> Geometry<R>::p20(const Tensor3<R>& phi) const {
    return (phi - with_J(phi, false, true, true) + with_J(phi, true, false, true) + with_J(phi, true, true, false)) *
           rr<R>(1, 4);
}

template <class R>
Tensor3<R> Geometry<R>::p02(const Tensor3<R>& phi) const {
    return (phi - with_J(phi, false, true, true) - with_J(phi, true, false, true) - with_J(phi, true, true, false)) *
           rr<R>(1, 4);
}

template <class R>
Tensor3<R> Geometry<R>::p11(const Tensor3<R>& phi) const {
    return (phi + with_J(phi, false, true, true)) * rr<R>(1, 2);
}

template <class R>
Tensor3<R> Geometry<R>::plus(const Tensor3<R>& phi) const {
    Tensor3<R> s = with_J(phi, true, true, false) + with_J(phi, false, true, true) + with_J(phi, true, false, true);
    return phi * rr<R>(3, 4) + s * rr<R>(1, 4);
}

template <class R>
Tensor3<R> Geometry<R>::minus(const Tensor3<R>& phi) const {
    return phi - plus(phi);
}

template <class R>
Tensor3<R> Geometry<R>::p11_a(const Tensor3<R>& phi) const {
    Tensor3<R> p = P(p11(phi));
    return (p + M(p)) * rr<R>(3, 4);
}

template <class R>
Tensor3<R> Geometry<R>::bracket_tensor() const {
    return c;
}

template <class R>
Tensor3<R> Geometry<R>::nijenhuis() const {
    // brackets of frame vectors with J applied: [J^x v_b, J^y v_c]
    auto br = [&](bool x, bool y) {
        Tensor3<R> out(m);  // out(k, b, c) = <v_k, [J^x v_b, J^y v_c]>
        for (int k = 0; k < m; ++k)
            for (int b = 0; b < m; ++b)
                for (int cc = 0; cc < m; ++cc) {
                    R acc = 0;
                    for (int p = 0; p < m; ++p) {
                        R wp = x ? Jkj(p, b) : R(p == b ? 1 : 0);
                        if (RealTraits<R>::is_zero(wp, 0)) continue;
                        for (int q = 0; q < m; ++q) {
                            R wq = y ? Jkj(q, cc) : R(q == cc ? 1 : 0);
                            if (RealTraits<R>::is_zero(wq, 0)) continue;
                            acc += wp * wq * c(k, p, q);
                        }
                    }
                    out(k, b, cc) = acc;
                }
        return out;
    };
    auto applyJ = [&](const Tensor3<R>& t) {  // J acting on the vector slot
        Tensor3<R> out(m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int cc = 0; cc < m; ++cc) {
                    R acc = 0;
                    for (int k = 0; k < m; ++k) acc += Jkj(a, k) * t(k, b, cc);
                    out(a, b, cc) = acc;
                }
        return out;
    };
    Tensor3<R> n = br(true, true) - applyJ(br(true, false)) - applyJ(br(false, true)) - br(false, false);
    return n * rr<R>(1, 4);
}

template <class R>
Tensor3<R> Geometry<R>::d_omega() const {
    // w(v_k, v_c) = <J v_k, v_c> = J(c, k)
    auto w_br = [&](int x, int y, int z) {
        R acc = 0;
        for (int k = 0; k < m; ++k) acc += c(k, x, y) * Jkj(z, k);
        return acc;
    };
    Tensor3<R> out(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) out(a, b, cc) = -w_br(a, b, cc) + w_br(a, cc, b) - w_br(b, cc, a);
    return out;
}

template <class R>
Tensor3<R> Geometry<R>::dc_omega() const {
    return -with_J(d_omega(), true, true, true);
}

template <class R>
Tensor3<R> Geometry<R>::levi_civita() const {
    Tensor3<R> g(m);
    const R half = rr<R>(1, 2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) g(i, j, k) = half * (c(k, i, j) - c(i, j, k) + c(j, k, i));
    return g;
}

template <class R>
Tensor3<R> Geometry<R>::torsion(const Tensor3<R>& gamma) const {
    Tensor3<R> t(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) t(a, b, cc) = gamma(b, cc, a) - gamma(cc, b, a) - c(a, b, cc);
    return t;
}

template <class R>
Tensor3<R> Geometry<R>::nabla_J(const Tensor3<R>& gamma) const {
    Tensor3<R> out(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) {
                R acc = 0;
                for (int p = 0; p < m; ++p) acc += Jkj(p, b) * gamma(a, p, cc) - gamma(a, b, p) * Jkj(cc, p);
                out(a, b, cc) = acc;
            }
    return out;
}

template <class R>
Tensor3<R> Geometry<R>::nabla_omega(const Tensor3<R>& gamma) const {
    Tensor3<R> out(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) {
                R acc = 0;
                for (int k = 0; k < m; ++k) acc -= gamma(a, b, k) * Jkj(cc, k) + gamma(a, cc, k) * Jkj(k, b);
                out(a, b, cc) = acc;
            }
    return out;
}

template <class R>
Tensor3<R> Geometry<R>::canonical_torsion(const mpq_class& t) const {
    Tensor3<R> dcp = plus(dc_omega());
    return nijenhuis() + dcp * rr<R>((3 * t - 1) / 4) - M(dcp) * rr<R>((t + 1) / 4);
}

template <class R>
Tensor3<R> Geometry<R>::canonical_potential(const mpq_class& t) const {
    Tensor3<R> n = nijenhuis();
    Tensor3<R> dcp = plus(dc_omega());
    return -n + P(n) * rr<R>(3, 2) + dcp * rr<R>((t - 1) / 4) + M(dcp) * rr<R>((t + 1) / 4);
}

template <class R>
Tensor3<R> Geometry<R>::gauduchon(const mpq_class& t) const {
    return levi_civita() + canonical_potential(t);
}

template <class R>
Tensor3<R> Geometry<R>::random_tensor(unsigned seed, int lo, int hi) const {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> u(lo, hi);
    Tensor3<R> t(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc) t(a, b, cc) = R(u(rng));
    return t;
}

template <class R>
Tensor3<R> Geometry<R>::random_skew(unsigned seed) const {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> u(-3, 3);
    Tensor3<R> t(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = b + 1; cc < m; ++cc) {
                t(a, b, cc) = R(u(rng));
                t(a, cc, b) = -t(a, b, cc);
            }
    return t;
}

template <class R>
Tensor3<R> Geometry<R>::random_three_form(unsigned seed) const {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> u(-3, 3);
    Tensor3<R> t(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int cc = b + 1; cc < m; ++cc) {
                R v(u(rng));
                t(a, b, cc) = v;
                t(b, cc, a) = v;
                t(cc, a, b) = v;
                t(b, a, cc) = -v;
                t(a, cc, b) = -v;
                t(cc, b, a) = -v;
            }
    return t;
}

template class Tensor3<mpq_class>;
template class Tensor3<double>;
template struct Geometry<mpq_class>;
template struct Geometry<double>;

// form conversions ------------------------------------------------------

template <class S>
Tensor3<real_of<S>> tensor_from_three_form(const Multivector<S>& phi) {
    using R = real_of<S>;
    const int m = phi.context().dim();
    Tensor3<R> t(m);
    for (const auto& [b, s] : phi.terms()) {
        if (grade(b) != 3) throw std::invalid_argument("not a 3-form");
        int idx[3], k = 0;
        for (int a = 0; a < m; ++a)
            if (b >> a & 1) idx[k++] = a;
        R v = real_part(s);
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p) t(idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]) = p < 3 ? v : R(-v);
    }
    return t;
}

template <class S>
Multivector<S> three_form_from_tensor(const AlgebraContext& ctx, const Tensor3<real_of<S>>& t) {
    Multivector<S> out(ctx);
    const int m = ctx.dim();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                out.add_term((Blade(1) << a) | (Blade(1) << b) | (Blade(1) << c), to_scalar<S>(t(a, b, c)));
    return out;
}

template <class S>
std::vector<real_of<S>> covector_from_form(const Multivector<S>& phi) {
    std::vector<real_of<S>> out(phi.context().dim(), real_of<S>(0));
    for (const auto& [b, s] : phi.terms()) {
        if (grade(b) != 1) throw std::invalid_argument("not a 1-form");
        out[std::countr_zero(b)] = real_part(s);
    }
    return out;
}

template <class S>
std::vector<real_of<S>> lee_form(const LieModel& model) {
    const auto& ctx = model.context();
    auto omega = fundamental_form<S>(ctx);
    auto domega = Multivector<S>::from_dense(ctx, ce_differential<S>(model).apply(omega.dense()));
    // Lambda = L^*: <Lambda phi, v_c> = <phi, omega ^ v_c>
    std::vector<real_of<S>> out(model.dim(), real_of<S>(0));
    for (int c = 0; c < model.dim(); ++c) {
        auto wc = wedge(omega, Multivector<S>::vector(ctx, c));
        S acc(0);
        for (const auto& [b, s] : domega.terms()) acc += ScalarTraits<S>::conj(s) * wc.coefficient(b);
        out[c] = real_part(acc);
    }
    return out;
}

#define CLIFF_INSTANTIATE(S)                                                                               \
    template Tensor3<real_of<S>> tensor_from_three_form(const Multivector<S>&);                           \
    template Multivector<S> three_form_from_tensor(const AlgebraContext&, const Tensor3<real_of<S>>&);    \
    template std::vector<real_of<S>> covector_from_form(const Multivector<S>&);                           \
    template std::vector<real_of<S>> lee_form<S>(const LieModel&);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

// appendix suite --------------------------------------------------------

namespace {

template <class R>
CheckResult tensor_eq(const Tensor3<R>& lhs, const Tensor3<R>& rhs, double tol) {
    Tensor3<R> diff = lhs - rhs;
    CheckResult r;
    r.pass = diff.is_zero(tol);
    r.residual = diff.max_abs();
    return r;
}

template <class R>
CheckResult vec_eq(const std::vector<R>& lhs, const std::vector<R>& rhs, double tol) {
    CheckResult r;
    r.pass = true;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        R d = lhs[k] - rhs[k];
        r.residual = std::max(r.residual, std::abs(RealTraits<R>::to_double(d)));
        if (!RealTraits<R>::is_zero(d, tol)) r.pass = false;
    }
    return r;
}

// Combines several sub-results; fails if any fails, residual is the max.
CheckResult all_of(std::initializer_list<CheckResult> parts) {
    CheckResult r;
    r.pass = true;
    for (const auto& p : parts) {
        r.pass = r.pass && p.pass;
        r.residual = std::max(r.residual, p.residual);
    }
    return r;
}

constexpr int kRandomSamples = 5;

}  // namespace

template <class S>
std::vector<Check> appendix_checks(const LieModel& model, const std::vector<mpq_class>& ts, double tol) {
    using R = real_of<S>;
    // the deferred checks own a copy of the model, which Geometry points into
    struct Owned {
        LieModel model;
        Geometry<R> geo{model};
    };
    auto owned = std::make_shared<const Owned>(model);
    std::shared_ptr<const Geometry<R>> geo(owned, &owned->geo);
    const LieModel* mdl = &owned->model;
    std::vector<Check> out;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> f) {
        out.push_back({std::move(id), std::move(anchor), std::move(f)});
    };

    add("app.lc.metric", "⟨∇̃_X Y, Z⟩ + ⟨Y, ∇̃_X Z⟩ = 0", [geo, tol] {
        return expect_true("", "", geo->levi_civita().skew_in_last_two(tol));
    });
    add("app.lc.torsion_free", "T(∇̃) = 0", [geo, tol] {
        return tensor_eq(geo->torsion(geo->levi_civita()), Tensor3<R>(geo->m), tol);
    });
    add("app.lc_omega_J", "(∇̃_X ω)(Y,Z) = ⟨(∇̃_X J)Y, Z⟩", [geo, tol] {
        auto g = geo->levi_civita();
        return tensor_eq(geo->nabla_omega(g), geo->nabla_J(g), tol);
    });
    add("app.lc_omega_formula", "½∇̃ω(X,Y,Z) = ¼dω(X,Y,Z) − ¼dω(X,JY,JZ) + N(JX,Y,Z)", [geo, tol] {
        auto lhs = geo->nabla_omega(geo->levi_civita()) * rr<R>(1, 2);
        auto dw = geo->d_omega();
        auto rhs = dw * rr<R>(1, 4) - geo->M(dw) * rr<R>(1, 4) + geo->with_J(geo->nijenhuis(), true, false, false);
        return tensor_eq(lhs, rhs, tol);
    });
    add("app.lc_omega_11", "(∇̃ω)^{1,1} = 0", [geo, tol] {
        return tensor_eq(geo->p11(geo->nabla_omega(geo->levi_civita())), Tensor3<R>(geo->m), tol);
    });
    add("app.d_omega", "dω(X,Y,Z) from brackets = d(ω) on forms", [geo, mdl, tol] {
        const auto& ctx = mdl->context();
        auto omega = fundamental_form<S>(ctx);
        auto dw = Multivector<S>::from_dense(ctx, ce_differential<S>(*mdl).apply(omega.dense()), tol);
        return tensor_eq(tensor_from_three_form(dw), geo->d_omega(), tol);
    });
    add("app.dc_omega", "d_cω(X,Y,Z) = −dω(JX,JY,JZ) = −(J_alg⁻¹ d J_alg)ω", [geo, mdl, tol] {
        const auto& ctx = mdl->context();
        auto Ja = J_alg_matrix<S>(ctx);
        auto Jinv = Ja * Ja * Ja;
        auto omega = fundamental_form<S>(ctx).dense();
        auto v = (Jinv * ce_differential<S>(*mdl) * Ja).apply(omega);
        auto form = Multivector<S>::from_dense(ctx, v, tol) * S(-1);
        return tensor_eq(tensor_from_three_form(form), geo->dc_omega(), tol);
    });
    add("app.N_02", "N(JX,Y,Z) = N(X,JY,Z)", [geo, tol] {
        auto n = geo->nijenhuis();
        return all_of({tensor_eq(geo->with_J(n, true, false, false), geo->with_J(n, false, true, false), tol),
                       tensor_eq(geo->p02(n), n, tol)});
    });
    add("app.rN", "r(N) = 0", [geo, tol] {
        return vec_eq(geo->r(geo->nijenhuis()), std::vector<R>(geo->m, R(0)), tol);
    });
    add("app.PN", "𝒫N = ⅓(d_cω)⁻", [geo, tol] {
        return tensor_eq(geo->P(geo->nijenhuis()), geo->minus(geo->dc_omega()) * rr<R>(1, 3), tol);
    });
    add("app.projections", "𝒫² = 𝒫, 𝒬² = 𝒬, 𝒫𝒬 = 𝒬𝒫 = 0, r∘i = Id", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            auto phi = geo->random_skew(100 + s);
            auto p = geo->P(phi), q = geo->Q(phi);
            auto f = geo->r(geo->random_skew(200 + s));
            acc = all_of({acc, tensor_eq(geo->P(p), p, tol), tensor_eq(geo->Q(q), q, tol),
                          tensor_eq(geo->P(q), Tensor3<R>(geo->m), tol), tensor_eq(geo->Q(p), Tensor3<R>(geo->m), tol),
                          vec_eq(geo->r(geo->i(f)), f, tol)});
        }
        return acc;
    });
    add("app.decomp", "φ = 𝒫φ + 𝒬φ + φ₀ with φ₀ ∈ ker 𝒫 ∩ ker 𝒬", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            auto phi = geo->random_skew(300 + s);
            auto p = geo->P(phi), q = geo->Q(phi);
            auto phi0 = phi - p - q;
            auto back = geo->P(p) + geo->i(geo->r(q)) + phi0;
            acc = all_of({acc, tensor_eq(geo->P(phi0), Tensor3<R>(geo->m), tol),
                          vec_eq(geo->r(phi0), std::vector<R>(geo->m, R(0)), tol), tensor_eq(back, phi, tol)});
        }
        return acc;
    });
    add("app.pjk", "p_{2,0} + p_{1,1} + p_{0,2} = Id, idempotent, mutually annihilating", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        Tensor3<R> zero(geo->m);
        for (int s = 0; s < kRandomSamples; ++s) {
            auto phi = geo->random_skew(400 + s);
            auto a = geo->p20(phi), b = geo->p11(phi), c = geo->p02(phi);
            acc = all_of({acc, tensor_eq(a + b + c, phi, tol), tensor_eq(geo->p20(a), a, tol),
                          tensor_eq(geo->p11(b), b, tol), tensor_eq(geo->p02(c), c, tol),
                          tensor_eq(geo->p20(b) + geo->p20(c), zero, tol), tensor_eq(geo->p11(a) + geo->p11(c), zero, tol),
                          tensor_eq(geo->p02(a) + geo->p02(b), zero, tol)});
        }
        return acc;
    });
    add("app.three_form_split", "φ⁻ = φ^{0,2}, φ⁺ = φ^{2,0} + φ^{1,1}", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s <= kRandomSamples; ++s) {
            auto phi = s < kRandomSamples ? geo->random_three_form(500 + s) : geo->d_omega();
            acc = all_of({acc, tensor_eq(geo->minus(phi), geo->p02(phi), tol),
                          tensor_eq(geo->plus(phi), geo->p20(phi) + geo->p11(phi), tol)});
        }
        return acc;
    });
    add("app.P_lc_omega", "𝒫(∇̃ω) = ⅓dω", [geo, tol] {
        return tensor_eq(geo->P(geo->nabla_omega(geo->levi_civita())), geo->d_omega() * rr<R>(1, 3), tol);
    });
    add("app.domega_plus_3PM", "(dω)⁺ = 3𝒫ℳ((dω)⁺)", [geo, tol] {
        auto dp = geo->plus(geo->d_omega());
        return tensor_eq(dp, geo->P(geo->M(dp)) * R(3), tol);
    });
    add("app.E_plus_J_identity", "φ(X,Y,Z) = φ(JX,JY,Z) + φ(X,JY,JZ) + φ(JX,Y,JZ) on E⁺", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s <= kRandomSamples; ++s) {
            auto phi = geo->plus(s < kRandomSamples ? geo->random_three_form(600 + s) : geo->d_omega());
            auto rhs = geo->with_J(phi, true, true, false) + geo->with_J(phi, false, true, true) +
                       geo->with_J(phi, true, false, true);
            acc = all_of({acc, tensor_eq(phi, rhs, tol)});
        }
        return acc;
    });
    add("app.P_02_in_E_minus", "𝒫(Ω^{0,2}(TM)) ⊆ E⁻", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            auto p = geo->P(geo->p02(geo->random_skew(700 + s)));
            acc = all_of({acc, tensor_eq(geo->plus(p), Tensor3<R>(geo->m), tol)});
        }
        return acc;
    });
    add("app.reconstruct_20", "φ = 3/2(𝒫φ − ℳ𝒫φ) on Ω^{2,0}(TM)", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            auto phi = geo->p20(geo->random_skew(800 + s));
            auto p = geo->P(phi);
            acc = all_of({acc, tensor_eq(phi, (p - geo->M(p)) * rr<R>(3, 2), tol)});
        }
        return acc;
    });
    add("app.reconstruct_11", "φ = 3/4(𝒫φ + ℳ𝒫φ) on Ω_a^{1,1}(TM)", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            // p11 of a 3-form lies in the orthogonal complement of ker P inside Omega^{1,1}
            auto phi = geo->p11(geo->random_three_form(900 + s));
            auto p = geo->P(phi);
            acc = all_of({acc, tensor_eq(phi, (p + geo->M(p)) * rr<R>(3, 4), tol)});
        }
        return acc;
    });
    add("app.P_plus_parts", "𝒫(φ_a^{1,1}) + 𝒫(φ^{2,0}) = (𝒫φ)⁺", [geo, tol] {
        CheckResult acc{"", "", true, 0.0, ""};
        for (int s = 0; s < kRandomSamples; ++s) {
            auto phi = geo->random_skew(1000 + s);
            auto lhs = geo->P(geo->p11_a(phi)) + geo->P(geo->p20(phi));
            acc = all_of({acc, tensor_eq(lhs, geo->plus(geo->P(phi)), tol)});
        }
        return acc;
    });
    add("app.rM_dc_theta", "r(ℳ(d_cω⁺)) = 2θ", [geo, mdl, tol] {
        auto lhs = geo->r(geo->M(geo->plus(geo->dc_omega())));
        auto theta = lee_form<S>(*mdl);
        for (auto& x : theta) x *= R(2);
        return vec_eq(lhs, theta, tol);
    });

    const bool kaehler_like = geo->d_omega().is_zero(tol);
    for (const auto& t : ts) {
        const std::string tag = "app.t=" + t.get_str() + ".";
        add(tag + "metric", "∇^t metric", [geo, t, tol] {
            return expect_true("", "", geo->gauduchon(t).skew_in_last_two(tol));
        });
        add(tag + "hermitian", "∇^t J = 0", [geo, t, tol] {
            return tensor_eq(geo->nabla_J(geo->gauduchon(t)), Tensor3<R>(geo->m), tol);
        });
        add(tag + "torsion", "T^t = N + (3t−1)/4 d_cω⁺ − (t+1)/4 ℳ(d_cω⁺)", [geo, t, tol] {
            return tensor_eq(geo->torsion(geo->gauduchon(t)), geo->canonical_torsion(t), tol);
        });
        add(tag + "potential", "A^t = −T^t + 3/2 𝒫T^t", [geo, t, tol] {
            auto T = geo->canonical_torsion(t);
            return tensor_eq(geo->canonical_potential(t), -T + geo->P(T) * rr<R>(3, 2), tol);
        });
        add(tag + "A_plus_T", "A + T = 3𝒫(A) = 3/2 𝒫(T)", [geo, t, tol] {
            auto A = geo->gauduchon(t) - geo->levi_civita();
            auto T = geo->torsion(geo->gauduchon(t));
            return all_of({tensor_eq(A + T, geo->P(A) * R(3), tol), tensor_eq(A + T, geo->P(T) * rr<R>(3, 2), tol)});
        });
        add(tag + "herm_iff1", "A(X,JY,Z) + A(X,Y,JZ) = −(∇̃ω)(X,Y,Z)", [geo, t, tol] {
            auto A = geo->gauduchon(t) - geo->levi_civita();
            auto lhs = geo->with_J(A, false, true, false) + geo->with_J(A, false, false, true);
            return tensor_eq(lhs, -geo->nabla_omega(geo->levi_civita()), tol);
        });
        add(tag + "herm_iff2", "T^{0,2} = N and T^{2,0} − 3/2(𝒫T^{1,1} − ℳ𝒫T^{1,1}) = ½((d_cω)⁺ − ℳ(d_cω)⁺)",
            [geo, t, tol] {
                auto T = geo->torsion(geo->gauduchon(t));
                auto p = geo->P(geo->p11(T));
                auto dcp = geo->plus(geo->dc_omega());
                return all_of({tensor_eq(geo->p02(T), geo->nijenhuis(), tol),
                               tensor_eq(geo->p20(T) - (p - geo->M(p)) * rr<R>(3, 2), (dcp - geo->M(dcp)) * rr<R>(1, 2),
                                         tol)});
            });
        add(tag + "dom_minus", "(dω)⁻(X,Y,Z) = −3(𝒫T)⁻(JX,Y,Z)", [geo, t, tol] {
            auto T = geo->torsion(geo->gauduchon(t));
            auto rhs = geo->with_J(geo->minus(geo->P(T)), true, false, false) * R(-3);
            return tensor_eq(geo->minus(geo->d_omega()), rhs, tol);
        });
        add(tag + "bpTnew", "𝒫(T^{2,0} − T_a^{1,1}) = ⅓d_cω⁺", [geo, t, tol] {
            auto T = geo->torsion(geo->gauduchon(t));
            auto lhs = geo->P(geo->p20(T) - geo->p11_a(T));
            return tensor_eq(lhs, geo->plus(geo->dc_omega()) * rr<R>(1, 3), tol);
        });
        add(tag + "T_thm", "T = N + 9/8 𝒫T⁺ + ⅛d_cω⁺ − 3/8 ℳ(𝒫T⁺) − 3/8 ℳ(d_cω⁺) + T_s^{1,1}", [geo, t, tol] {
            auto T = geo->torsion(geo->gauduchon(t));
            auto pt = geo->plus(geo->P(T));
            auto dcp = geo->plus(geo->dc_omega());
            auto ts = geo->p11(T) - geo->p11_a(T);
            auto rhs = geo->nijenhuis() + pt * rr<R>(9, 8) + dcp * rr<R>(1, 8) - geo->M(pt) * rr<R>(3, 8) -
                       geo->M(dcp) * rr<R>(3, 8) + ts;
            return tensor_eq(T, rhs, tol);
        });
        add(tag + "canonical", "T_s^{1,1} = 0 and 𝒫T⁺ = (2t−1)/3 (d_cω)⁺", [geo, t, tol] {
            auto T = geo->torsion(geo->gauduchon(t));
            auto ts = geo->p11(T) - geo->p11_a(T);
            return all_of({tensor_eq(ts, Tensor3<R>(geo->m), tol),
                           tensor_eq(geo->plus(geo->P(T)), geo->plus(geo->dc_omega()) * rr<R>((2 * t - 1) / 3), tol)});
        });
        add(tag + "rA", "r(A) = (t+1)/2 θ", [geo, mdl, t, tol] {
            auto A = geo->gauduchon(t) - geo->levi_civita();
            auto theta = lee_form<S>(*mdl);
            for (auto& x : theta) x *= rr<R>((t + 1) / 2);
            return vec_eq(geo->r(A), theta, tol);
        });
        add(tag + "affine", "∇^t = (1+t)/2 ∇¹ + (1−t)/2 ∇⁻¹", [geo, t, tol] {
            auto rhs = geo->gauduchon(1) * rr<R>((1 + t) / 2) + geo->gauduchon(-1) * rr<R>((1 - t) / 2);
            return tensor_eq(geo->gauduchon(t), rhs, tol);
        });
        if (kaehler_like)
            add(tag + "ak_agree", "dω = 0 ⇒ T^t = T¹", [geo, t, tol] {
                return tensor_eq(geo->torsion(geo->gauduchon(t)), geo->torsion(geo->gauduchon(1)), tol);
            });
    }
    add("app.chern_torsion_11", "T¹ has no (1,1) part", [geo, tol] {
        return tensor_eq(geo->p11(geo->torsion(geo->gauduchon(1))), Tensor3<R>(geo->m), tol);
    });
    return out;
}

template std::vector<Check> appendix_checks<ExactScalar>(const LieModel&, const std::vector<mpq_class>&, double);
template std::vector<Check> appendix_checks<FloatScalar>(const LieModel&, const std::vector<mpq_class>&, double);

}  // namespace cliff
