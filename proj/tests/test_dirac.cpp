#include "cliffordlab/dirac.hpp"

#include <gtest/gtest.h>

using namespace cliff;
using S = ExactScalar;
using MV = Multivector<S>;
using Mat = Matrix<S>;

namespace {

LieModel catalog(const std::string& name) { return load_model(resolve_model_path(name, CLIFFORDLAB_CATALOG_DIR)); }

void expect_all_pass(const std::vector<Check>& checks, const std::string& tag) {
    auto r = run_checks(tag, checks);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << tag << " " << c.id << " " << c.detail;
}

// Oracle: nabla_a on the blade v_{i1}...v_{ik} by the Leibniz rule over the
// Clifford product, with nabla_a v_j = sum_k Gamma(a,j,k) v_k.
MV nabla_blade(const AlgebraContext& ctx, const Tensor3<mpq_class>& gamma, int a, Blade b) {
    std::vector<int> idx;
    for (int k = 0; k < ctx.dim(); ++k)
        if (b & (Blade(1) << k)) idx.push_back(k);
    MV out(ctx);
    for (std::size_t l = 0; l < idx.size(); ++l) {
        MV term = MV::scalar(ctx, S(1));
        for (std::size_t p = 0; p < idx.size(); ++p) {
            MV factor(ctx);
            if (p == l) {
                for (int k = 0; k < ctx.dim(); ++k)
                    if (gamma(a, idx[p], k) != 0) factor += MV::vector(ctx, k) * S(gamma(a, idx[p], k));
            } else {
                factor = MV::vector(ctx, idx[p]);
            }
            term = clifford_mul(term, factor);
        }
        out += term;
    }
    return out;
}

// Oracle: sum_a v_a . nabla_a as a matrix, column by column.
Mat dirac_oracle(const AlgebraContext& ctx, const Tensor3<mpq_class>& gamma) {
    const std::size_t N = ctx.algebra_dim();
    Mat D(N, N);
    for (Blade b = 0; b < N; ++b) {
        MV img(ctx);
        for (int a = 0; a < ctx.dim(); ++a) img += clifford_mul(MV::vector(ctx, a), nabla_blade(ctx, gamma, a, b));
        auto col = img.dense();
        for (std::size_t r = 0; r < N; ++r) D(r, b) = col[r];
    }
    return D;
}

}  // namespace

TEST(Dirac, OperatorsMatchLeibnizOracle) {
    for (auto name : {"kt", "kt_ak", "torus4"}) {
        FormOperators<S> f(catalog(name), 0);
        DiracOperators<S> o(f);
        EXPECT_EQ(o.D_lc, dirac_oracle(f.ctx(), o.geo.levi_civita())) << name;
        for (int t : {-1, 0, 1, 2})
            EXPECT_EQ(o.D_t(mpq_class(t)), dirac_oracle(f.ctx(), o.geo.gauduchon(mpq_class(t)))) << name << " t=" << t;
    }
}

TEST(Dirac, TorusAllConnectionsCoincide) {
    FormOperators<S> f(catalog("torus4"), 0);
    DiracOperators<S> o(f);
    EXPECT_TRUE(o.D_lc.is_zero(0));
    for (int t : {-1, 0, 1, 2}) EXPECT_EQ(o.D_t(mpq_class(t)), o.D_lc);
    EXPECT_EQ(o.curly_D, o.curly_B);
}

TEST(Dirac, KTLeeFormAndAdjoint) {
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    EXPECT_FALSE(f.balanced);
    // D_t* - D_t is a zeroth order operator proportional to t + 1
    Mat base = o.left_mul(o.theta_vec());
    for (int t : {-1, 0, 1}) {
        Mat Dt = o.D_t(mpq_class(t));
        EXPECT_EQ(Dt.adjoint() - Dt, base * (S(t + 1) * rat<S>(1, 2))) << t;
    }
    EXPECT_FALSE(base.is_zero(0));
}

TEST(Dirac, SplitOperatorFromDirectFrameSum) {
    // d_t = sum_a eps(v_a) . nabla_{v_a}, built from the oracle's nabla columns
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    const auto& ctx = f.ctx();
    const std::size_t N = ctx.algebra_dim();
    for (int t : {-1, 1}) {
        auto gamma = o.geo.gauduchon(mpq_class(t));
        Mat d(N, N);
        for (Blade b = 0; b < N; ++b) {
            MV img(ctx);
            for (int a = 0; a < ctx.dim(); ++a)
                img += clifford_mul(o.vector_mv(o.eps_vec(a)), nabla_blade(ctx, gamma, a, b));
            auto col = img.dense();
            for (std::size_t r = 0; r < N; ++r) d(r, b) = col[r];
        }
        EXPECT_EQ(o.split(o.D_t(mpq_class(t))), d) << t;
    }
}

TEST(Dirac, BochnerSquareAgainstLiteralSquare) {
    for (auto name : {"kt", "kt_ak", "torus4"}) {
        FormOperators<S> f(catalog(name), 0);
        DiracOperators<S> o(f);
        for (int t : {-1, 0, 1}) {
            Mat d = o.split(o.D_t(mpq_class(t)));
            EXPECT_EQ(d * d * rat<S>(1, 4), bochner_square_rhs(o, mpq_class(t))) << name << " t=" << t;
            EXPECT_EQ(d * d.conj() + d.conj() * d, bochner_anticommutator_rhs(o, mpq_class(t))) << name << " t=" << t;
        }
    }
}

TEST(Dirac, TorsionTermEntersWithMinusSign) {
    // with +nabla_T in place of -nabla_T the square identity breaks on kt_ak
    FormOperators<S> f(catalog("kt_ak"), 0);
    DiracOperators<S> o(f);
    ConnectionCalculus<S> cc(o, o.geo.gauduchon(mpq_class(1)));
    Mat plus(o.dim(), o.dim());
    for (int a = 0; a < o.m(); ++a)
        for (int b = 0; b < o.m(); ++b) {
            auto Ea = o.eps_bar_vec(a), Eb = o.eps_bar_vec(b);
            plus += o.left_mul(o.eps_vec(a)) * o.left_mul(o.eps_vec(b)) *
                    (cc.curvature(Ea, Eb) + cc.nabla(cc.torsion(Ea, Eb)));
        }
    Mat d = o.split(o.D_t(mpq_class(1)));
    EXPECT_FALSE((d * d * rat<S>(1, 4) - plus * rat<S>(1, 8)).is_zero(0));
    EXPECT_FALSE((d * d).is_zero(0));
}

TEST(Dirac, SplitSquareOnKT) {
    // the split operator is not a differential on KT at t = 1 (dω ≠ 0, N = 0)
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    ASSERT_TRUE(f.integrable);
    Mat d = o.split(o.D_t(mpq_class(1)));
    EXPECT_FALSE((d * d).is_zero(0));
    // and it is at t = -1, where both sides of the square identity vanish
    Mat b = o.split(o.D_t(mpq_class(-1)));
    EXPECT_TRUE((b * b).is_zero(0));
}

TEST(Dirac, CurvatureFlatOnTorus) {
    FormOperators<S> f(catalog("torus4"), 0);
    DiracOperators<S> o(f);
    ConnectionCalculus<S> cc(o, o.geo.gauduchon(mpq_class(0)));
    for (const auto& R : cc.Rm) EXPECT_TRUE(R.is_zero(0));
}

TEST(Dirac, SuitesOnCatalog) {
    const std::vector<mpq_class> ts{-1, 0, 1, 2};
    for (auto name : {"kt", "kt_ak", "torus4"}) {
        FormOperators<S> f(catalog(name), 0);
        DiracOperators<S> o(f);
        expect_all_pass(dirac_checks(o, ts), name);
        expect_all_pass(correspondence_checks(o, ts), name);
        expect_all_pass(laplacian_checks(o), name);
        expect_all_pass(bochner_checks(o, {mpq_class(-1), mpq_class(1)}), name);
        if (f.almost_kaehler) expect_all_pass(almost_kaehler_dirac_checks(o), name);
    }
}

TEST(Dirac, AlmostKaehlerIdentitiesFailOnKT) {
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    auto r = run_checks("kt", almost_kaehler_dirac_checks(o));
    EXPECT_GT(r.failures(), 0u);
}

TEST(Dirac, FloatBackendAgrees) {
    FormOperators<FloatScalar> f(catalog("kt"), 1e-9);
    DiracOperators<FloatScalar> o(f);
    const std::vector<mpq_class> ts{-1, 0, 1, 2};
    auto r = run_checks("kt", dirac_checks(o, ts));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.residual;
    r = run_checks("kt", correspondence_checks(o, ts));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.residual;
    r = run_checks("kt", bochner_checks(o, {mpq_class(-1), mpq_class(1)}));
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.residual;
}
