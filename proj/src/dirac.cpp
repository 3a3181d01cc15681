#include "cliffordlab/dirac.hpp"
#include "cliffordlab/check_util.hpp"

#include <random>

namespace cliff {

template <class S>
DiracOperators<S>::DiracOperators(const FormOperators<S>& f) : forms(&f), geo(f.model) {
    D_lc = dirac(geo.levi_civita());
    B = D_t(mpq_class(-1));
    curly_D = split(D_lc);
    curly_D_bar = curly_D.conj();
    curly_B = split(B);
    curly_B_bar = curly_B.conj();
    clifford_pi = clifford_bidegree_projectors(f.sl2.Jc, f.sl2.Hc, geo.m / 2, f.tol);
}

template <class S>
std::vector<Matrix<S>> DiracOperators<S>::nabla(const Tensor3<R>& gamma) const {
    const auto& ctx = forms->ctx();
    std::vector<Matrix<S>> out;
    out.reserve(geo.m);
    for (int a = 0; a < geo.m; ++a) {
        // nabla_a v_j = sum_k Gamma(a,j,k) v_k
        Matrix<S> A(geo.m, geo.m);
        for (int j = 0; j < geo.m; ++j)
            for (int k = 0; k < geo.m; ++k) A(k, j) = to_scalar<S>(gamma(a, j, k));
        out.push_back(derivation_matrix(ctx, A));
    }
    return out;
}

template <class S>
Matrix<S> DiracOperators<S>::dirac(const Tensor3<R>& gamma) const {
    const auto& ctx = forms->ctx();
    auto N = nabla(gamma);
    Matrix<S> D(dim(), dim());
    for (int a = 0; a < geo.m; ++a) D += left_mul_matrix(Multivector<S>::vector(ctx, a)) * N[a];
    return D;
}

template <class S>
Matrix<S> DiracOperators<S>::D_t(const mpq_class& t) const {
    return dirac(geo.gauduchon(t));
}

template <class S>
Matrix<S> DiracOperators<S>::split(const Matrix<S>& D) const {
    return (D + c(D) * ScalarTraits<S>::i()) * rat<S>(1, 2);
}

template <class S>
Multivector<S> DiracOperators<S>::vector_mv(const CVector<S>& X) const {
    return Multivector<S>::vector(forms->ctx(), X);
}

template <class S>
Matrix<S> DiracOperators<S>::left_mul(const CVector<S>& X) const {
    return left_mul_matrix(vector_mv(X));
}

template <class S>
CVector<S> DiracOperators<S>::frame_vec(int a) const {
    CVector<S> v(geo.m, S(0));
    v[a] = S(1);
    return v;
}

template <class S>
CVector<S> DiracOperators<S>::J_vec(const CVector<S>& X) const {
    CVector<S> out(geo.m, S(0));
    for (int k = 0; k < geo.m; ++k)
        for (int j = 0; j < geo.m; ++j)
            if (geo.Jkj(k, j) != R(0)) out[k] += to_scalar<S>(geo.Jkj(k, j)) * X[j];
    return out;
}

template <class S>
CVector<S> DiracOperators<S>::eps_vec(int a) const {
    const S half = rat<S>(1, 2), i = ScalarTraits<S>::i();
    auto v = frame_vec(a);
    auto Jv = J_vec(v);
    CVector<S> out(geo.m);
    for (int k = 0; k < geo.m; ++k) out[k] = (v[k] - i * Jv[k]) * half;
    return out;
}

template <class S>
CVector<S> DiracOperators<S>::eps_bar_vec(int a) const {
    auto e = eps_vec(a);
    for (auto& x : e) x = ScalarTraits<S>::conj(x);
    return e;
}

template <class S>
CVector<S> DiracOperators<S>::theta_vec() const {
    auto th = covector_from_form<S>(forms->theta);
    CVector<S> out(geo.m);
    for (int k = 0; k < geo.m; ++k) out[k] = to_scalar<S>(th[k]);
    return out;
}

template <class S>
Matrix<S> DiracOperators<S>::d_A(const Tensor3<R>& A) const {
    const auto& ctx = forms->ctx();
    Matrix<S> out(dim(), dim());
    for (int a = 0; a < geo.m; ++a) {
        std::vector<R> y(geo.m, R(0));
        y[a] = R(1);
        auto img = pair_form<S>(ctx, A, y);
        out += wedge_matrix(img) * interior_matrix(Multivector<S>::vector(ctx, a));
    }
    return out;
}

template <class S>
S eval3(const Tensor3<real_of<S>>& phi, const CVector<S>& X, const CVector<S>& Y, const CVector<S>& Z) {
    using R = real_of<S>;
    const int m = phi.dim();
    S s(0);
    for (int a = 0; a < m; ++a) {
        if (ScalarTraits<S>::is_zero(X[a], 0)) continue;
        for (int b = 0; b < m; ++b) {
            if (ScalarTraits<S>::is_zero(Y[b], 0)) continue;
            for (int c = 0; c < m; ++c)
                if (phi(a, b, c) != R(0) && !ScalarTraits<S>::is_zero(Z[c], 0))
                    s += X[a] * Y[b] * Z[c] * to_scalar<S>(phi(a, b, c));
        }
    }
    return s;
}

// ---- ConnectionCalculus ----

template <class S>
ConnectionCalculus<S>::ConnectionCalculus(const DiracOperators<S>& o, const Tensor3<R>& g)
    : ops(&o), gamma(g), N(o.nabla(g)) {
    const int m = o.m();
    Rm.resize(std::size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Matrix<S> r = commutator(N[a], N[b]);
            for (int k = 0; k < m; ++k)
                if (o.geo.c(k, a, b) != R(0)) r -= N[k] * to_scalar<S>(o.geo.c(k, a, b));
            Rm[std::size_t(a) * m + b] = std::move(r);
        }
}

template <class S>
Matrix<S> ConnectionCalculus<S>::nabla(const CVector<S>& X) const {
    Matrix<S> out(ops->dim(), ops->dim());
    for (std::size_t a = 0; a < X.size(); ++a)
        if (!ScalarTraits<S>::is_zero(X[a], 0)) out += N[a] * X[a];
    return out;
}

template <class S>
CVector<S> ConnectionCalculus<S>::cov(const CVector<S>& X, const CVector<S>& Y) const {
    const int m = ops->m();
    CVector<S> out(m, S(0));
    for (int a = 0; a < m; ++a) {
        if (ScalarTraits<S>::is_zero(X[a], 0)) continue;
        for (int j = 0; j < m; ++j) {
            if (ScalarTraits<S>::is_zero(Y[j], 0)) continue;
            for (int k = 0; k < m; ++k)
                if (gamma(a, j, k) != R(0)) out[k] += X[a] * Y[j] * to_scalar<S>(gamma(a, j, k));
        }
    }
    return out;
}

template <class S>
CVector<S> ConnectionCalculus<S>::bracket(const CVector<S>& X, const CVector<S>& Y) const {
    const int m = ops->m();
    CVector<S> out(m, S(0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (ScalarTraits<S>::is_zero(X[a], 0) || ScalarTraits<S>::is_zero(Y[b], 0)) continue;
            for (int k = 0; k < m; ++k)
                if (ops->geo.c(k, a, b) != R(0)) out[k] += X[a] * Y[b] * to_scalar<S>(ops->geo.c(k, a, b));
        }
    return out;
}

template <class S>
CVector<S> ConnectionCalculus<S>::torsion(const CVector<S>& X, const CVector<S>& Y) const {
    auto a = cov(X, Y), b = cov(Y, X), c = bracket(X, Y);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] - b[k] - c[k];
    return a;
}

template <class S>
Matrix<S> ConnectionCalculus<S>::second(const CVector<S>& X, const CVector<S>& Y) const {
    return nabla(X) * nabla(Y) - nabla(cov(X, Y));
}

template <class S>
Matrix<S> ConnectionCalculus<S>::curvature(const CVector<S>& X, const CVector<S>& Y) const {
    const int m = ops->m();
    Matrix<S> out(ops->dim(), ops->dim());
    for (int a = 0; a < m; ++a) {
        if (ScalarTraits<S>::is_zero(X[a], 0)) continue;
        for (int b = 0; b < m; ++b)
            if (!ScalarTraits<S>::is_zero(Y[b], 0)) out += Rm[std::size_t(a) * m + b] * (X[a] * Y[b]);
    }
    return out;
}

template <class S>
Matrix<S> ConnectionCalculus<S>::curvature_direct(const CVector<S>& X, const CVector<S>& Y) const {
    return commutator(nabla(X), nabla(Y)) - nabla(bracket(X, Y));
}

}  // namespace cliff

namespace cliff {
#define CLIFF_INSTANTIATE(S)                  \
    template struct DiracOperators<S>;        \
    template struct ConnectionCalculus<S>;    \
    template S eval3(const Tensor3<real_of<S>>&, const CVector<S>&, const CVector<S>&, const CVector<S>&);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE
}  // namespace cliff
