#include "cliffordlab/sl2.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <random>

using namespace cliff;
using MV = Multivector<ExactScalar>;
using Mat = Matrix<ExactScalar>;

namespace {

void expect_all_pass(const std::vector<Check>& checks) {
    auto r = run_checks("t", checks);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.anchor << " " << c.detail;
}

MV apply(const Mat& m, const MV& x) { return MV::from_dense(x.context(), m.apply(x.dense())); }

Eigen::MatrixXcd eig(const Mat& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
    return e;
}

}  // namespace

TEST(Sl2, LOfOneForN1) {
    auto ctx = AlgebraContext::standard(1);
    auto ops = build_sl2<ExactScalar>(ctx);
    auto e1 = MV::vector(ctx, 0);
    auto Je1 = apply_J(e1);
    // oracle: -eps 1 epsbar, expanded through the Clifford product
    auto oracle = -clifford_mul(epsilon(e1), epsilon_bar(e1));
    auto expected = MV::scalar(ctx, ExactScalar(mpq_class(1, 2))) +
                    wedge(e1, Je1) * ExactScalar(0, mpq_class(-1, 2), 0, 0);
    EXPECT_EQ(oracle, expected);
    EXPECT_EQ(apply(ops.Lc, MV::scalar(ctx, ExactScalar(1))), expected);
}

TEST(Sl2, TripleRelations) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        expect_all_pass(sl2_checks(ops, 0));
        expect_all_pass(correspondence_checks(ops, 0));
    }
}

TEST(Sl2, HTwoSidedFormulaOnRandomElements) {
    auto ctx = AlgebraContext::standard(2);
    auto ops = build_sl2<ExactScalar>(ctx);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int t = 0; t < 100; ++t) {
        MV x(ctx);
        for (Blade b = 0; b < 16; ++b) x.add_term(b, ExactScalar(v(rng), v(rng), 0, 0));
        auto lhs = apply(ops.Hc, x);
        auto rhs = clifford_mul(ops.omega0, x) + clifford_mul(x, ops.omega0);
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(Sl2, JOperators) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        EXPECT_TRUE(commutator(ops.Jc, ops.Lc).is_zero(0));
        EXPECT_TRUE(commutator(ops.Jc, ops.Lc_bar).is_zero(0));
        EXPECT_TRUE(commutator(ops.Jc, ops.Hc).is_zero(0));
    }
}

TEST(Sl2, ExteriorTriple) {
    auto ctx = AlgebraContext::standard(2);
    auto ops = build_sl2<ExactScalar>(ctx);
    EXPECT_EQ(apply(ops.L, MV::scalar(ctx, ExactScalar(1))), ops.omega);
    EXPECT_EQ(commutator(ops.Lambda, ops.L), ops.H);
    for (Blade b = 0; b < 16; ++b)
        EXPECT_EQ(apply(ops.H, MV::blade(ctx, b)), MV::blade(ctx, b, ExactScalar(2 - grade(b))));
    // oracle: <omega, omega> under the orthonormal blade pairing
    ExactScalar norm(0);
    for (const auto& [b, s] : ops.omega.terms()) norm += s.conj() * s;
    EXPECT_EQ(norm, ExactScalar(2));
    EXPECT_EQ(apply(ops.Lambda, ops.omega), MV::scalar(ctx, norm));
}

TEST(Sl2, BigradingN1) {
    auto ctx = AlgebraContext::standard(1);
    auto ops = build_sl2<ExactScalar>(ctx);
    auto table = bidegree_decompose(ops, 0);
    // oracle: joint kernels of (Jc - r) and (Hc - s) on the 4-dim space
    std::map<Bidegree, std::size_t> oracle;
    for (int r = -1; r <= 1; ++r)
        for (int s = -1; s <= 1; ++s) {
            Mat stacked = vstack(ops.Jc - Mat::identity(4) * ExactScalar(r), ops.Hc - Mat::identity(4) * ExactScalar(s));
            std::size_t d = nullspace(stacked, 0).cols();
            if (d) oracle[{r, s}] = d;
        }
    std::map<Bidegree, std::size_t> got;
    for (const auto& [rs, B] : table.clifford) got[rs] = B.cols();
    EXPECT_EQ(got, oracle);
    std::map<Bidegree, std::size_t> expected{{{-1, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    EXPECT_EQ(got, expected);
}

TEST(Sl2, BigradingAndHodgeAutomorphism) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        expect_all_pass(bigrading_checks(ops, 0));
        expect_all_pass(hodge_aut_checks(ops, 0));
    }
}

TEST(Sl2, FormProjectorsPartitionIdentity) {
    auto ctx = AlgebraContext::standard(2);
    auto ops = build_sl2<ExactScalar>(ctx);
    auto P = form_bidegree_projectors(ops, 0);
    Mat total(16, 16);
    for (const auto& [a, A] : P) {
        EXPECT_EQ(A * A, A);
        for (const auto& [b, B] : P)
            if (a != b) EXPECT_TRUE((A * B).is_zero(0));
        total += A;
    }
    EXPECT_EQ(total, Mat::identity(16));
}

TEST(Sl2, HodgeAutomorphismAgainstMatrixExponential) {
    for (int n = 1; n <= 2; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        auto [g, ginv] = hodge_automorphism(ops, 0);
        const std::complex<double> I(0, 1);
        Eigen::MatrixXcd A = (-M_PI / 4.0 * I) * eig(ops.H);
        Eigen::MatrixXcd B = (M_PI / 4.0) * (eig(ops.Lambda) - eig(ops.L));
        Eigen::MatrixXcd oracle = A.exp() * B.exp();
        EXPECT_LT((oracle - eig(g)).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
        EXPECT_EQ(g * ginv, Mat::identity(ctx.algebra_dim()));
    }
}

TEST(Sl2, ConjugationTable) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        EXPECT_EQ(ops.conj_t(ops.Lc), ops.Lc_bar);
        EXPECT_EQ(ops.conj_t(ops.Hc), -ops.Hc);
        EXPECT_EQ(ops.conj_t(ops.Jc), ops.Jc);
        EXPECT_EQ(ops.conj_c(ops.Hc), ops.Hc);
        // J_alg fixes both raising and lowering operators
        EXPECT_EQ(ops.conj_c(ops.Lc), ops.Lc);
        EXPECT_EQ(ops.conj_c(ops.Lc_bar), ops.Lc_bar);
        EXPECT_EQ(ops.conj_c(ops.Jc), ops.Jc);
        // complex conjugation c T c is entrywise conjugation
        EXPECT_EQ(ops.Lc.conj(), ops.Lc_bar);
    }
}

// Measured rather than assumed: with blades orthonormal and the pairing
// Hermitian in the left slot, the adjoint of L is Lbar.
TEST(Sl2, AdjointOfLIsLbar) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto ops = build_sl2<ExactScalar>(ctx);
        EXPECT_EQ(ops.Lc.adjoint(), ops.Lc_bar) << "n=" << n;
    }
}

TEST(Sl2, FloatBackendAgrees) {
    auto ctx = AlgebraContext::standard(2);
    auto ops = build_sl2<FloatScalar>(ctx);
    for (const auto& c : run_checks("f", sl2_checks(ops, 1e-9)).checks) EXPECT_TRUE(c.pass) << c.id;
    for (const auto& c : run_checks("f", hodge_aut_checks(ops, 1e-9)).checks) EXPECT_TRUE(c.pass) << c.id;
    for (const auto& c : run_checks("f", bigrading_checks(ops, 1e-9)).checks) EXPECT_TRUE(c.pass) << c.id;
}
