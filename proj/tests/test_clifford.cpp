#include "cliffordlab/clifford.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cliff;
using MV = Multivector<ExactScalar>;

namespace {

// Independent product oracle: a word of generator indices is bubble-sorted,
// each adjacent swap of distinct generators flips the sign and each adjacent
// equal pair v_k v_k collapses to -1.
std::pair<int, Blade> oracle_word_product(std::vector<int> word) {
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            } else if (word[i] == word[i + 1]) {
                word.erase(word.begin() + i, word.begin() + i + 2);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    Blade b = 0;
    for (int k : word) b |= Blade(1) << k;
    return {sign, b};
}

std::vector<int> word_of(Blade b) {
    std::vector<int> w;
    for (int k = 0; k < 32; ++k)
        if (b >> k & 1) w.push_back(k);
    return w;
}

MV random_mv(const AlgebraContext& ctx, std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<int> v(-3, 3);
    std::uniform_int_distribution<Blade> bl(0, Blade(ctx.algebra_dim() - 1));
    MV m(ctx);
    for (int t = 0; t < terms; ++t) m.add_term(bl(rng), ExactScalar(v(rng), v(rng), 0, 0));
    return m;
}

ExactScalar inner(const MV& x, const MV& y) {
    // Hermitian in the left slot, blades orthonormal
    ExactScalar s(0);
    for (const auto& [b, c] : x.terms()) s += c.conj() * y.coefficient(b);
    return s;
}

}  // namespace

TEST(Clifford, BladeProductMatchesWordOracle) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        for (Blade a = 0; a < ctx.algebra_dim(); ++a)
            for (Blade b = 0; b < ctx.algebra_dim(); ++b) {
                auto w = word_of(a);
                auto wb = word_of(b);
                w.insert(w.end(), wb.begin(), wb.end());
                auto [s, c] = oracle_word_product(w);
                ASSERT_EQ(clifford_sign(a, b), s);
                ASSERT_EQ(a ^ b, c);
            }
    }
}

TEST(Clifford, GeneratorSquaresToMinusOne) {
    auto ctx = AlgebraContext::standard(2);
    auto e1 = MV::vector(ctx, 0);
    EXPECT_EQ(clifford_mul(e1, e1), MV::scalar(ctx, ExactScalar(-1)));
}

TEST(Clifford, ProductAgainstTwoBlade) {
    auto ctx = AlgebraContext::standard(2);
    auto e1 = MV::vector(ctx, 0), e2 = MV::vector(ctx, 1);
    auto e12 = wedge(e1, e2);
    // v.phi = v^phi - v _| phi
    auto expected = wedge(e1, e12) - contract(e1, e12);
    EXPECT_EQ(expected, -e2);
    EXPECT_EQ(clifford_mul(e1, e12), expected);
}

TEST(Clifford, EpsilonRelation) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        for (int k = 0; k < n; ++k) {
            auto v = MV::vector(ctx, k);
            auto e = epsilon(v), eb = epsilon_bar(v);
            EXPECT_EQ(clifford_mul(e, eb) + clifford_mul(eb, e), MV::scalar(ctx, ExactScalar(-1)));
            EXPECT_TRUE(clifford_mul(e, e).is_zero());
        }
    }
}

TEST(Clifford, AssociativityExhaustiveUpToN2) {
    for (int n = 1; n <= 2; ++n) {
        auto ctx = AlgebraContext::standard(n);
        std::size_t N = ctx.algebra_dim();
        for (Blade a = 0; a < N; ++a)
            for (Blade b = 0; b < N; ++b)
                for (Blade c = 0; c < N; ++c) {
                    auto x = MV::blade(ctx, a), y = MV::blade(ctx, b), z = MV::blade(ctx, c);
                    ASSERT_EQ(clifford_mul(clifford_mul(x, y), z), clifford_mul(x, clifford_mul(y, z)));
                }
    }
}

TEST(Clifford, AssociativitySampledN3) {
    auto ctx = AlgebraContext::standard(3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<Blade> bl(0, 63);
    for (int t = 0; t < 10000; ++t) {
        auto x = MV::blade(ctx, bl(rng)), y = MV::blade(ctx, bl(rng)), z = MV::blade(ctx, bl(rng));
        ASSERT_EQ(clifford_mul(clifford_mul(x, y), z), clifford_mul(x, clifford_mul(y, z)));
    }
}

TEST(Clifford, CliffordRelation) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        for (int i = 0; i < ctx.dim(); ++i)
            for (int j = 0; j < ctx.dim(); ++j) {
                auto v = MV::vector(ctx, i), w = MV::vector(ctx, j);
                auto lhs = clifford_mul(v, w) + clifford_mul(w, v);
                EXPECT_EQ(lhs, MV::scalar(ctx, ExactScalar(i == j ? -2 : 0)));
            }
    }
}

TEST(Clifford, WedgeAndContractBasics) {
    auto ctx = AlgebraContext::standard(2);
    auto e1 = MV::vector(ctx, 0), e2 = MV::vector(ctx, 1);
    EXPECT_TRUE(wedge(e1, e1).is_zero());
    EXPECT_EQ(contract(e1, wedge(e1, e2)), e2);
    EXPECT_THROW(contract(wedge(e1, e2), e1), std::invalid_argument);
    auto other = AlgebraContext::standard(1);
    EXPECT_THROW(clifford_mul(e1, MV::vector(other, 0)), std::invalid_argument);
}

TEST(Clifford, WedgeGradedCommutative) {
    auto ctx = AlgebraContext::standard(2);
    for (Blade a = 0; a < 16; ++a)
        for (Blade b = 0; b < 16; ++b) {
            auto x = MV::blade(ctx, a), y = MV::blade(ctx, b);
            int s = (grade(a) * grade(b)) % 2 ? -1 : 1;
            ASSERT_EQ(wedge(x, y), wedge(y, x) * ExactScalar(s));
        }
}

TEST(Clifford, ContractIsGradedDerivation) {
    auto ctx = AlgebraContext::standard(2);
    for (int k = 0; k < 4; ++k) {
        auto v = MV::vector(ctx, k);
        for (Blade a = 0; a < 16; ++a)
            for (Blade b = 0; b < 16; ++b) {
                auto x = MV::blade(ctx, a), y = MV::blade(ctx, b);
                auto rhs = wedge(contract(v, x), y) + wedge(x, contract(v, y)) * ExactScalar(grade(a) % 2 ? -1 : 1);
                ASSERT_EQ(contract(v, wedge(x, y)), rhs);
            }
    }
}

TEST(Clifford, WedgeInteriorAdjointGram) {
    auto ctx = AlgebraContext::standard(2);
    for (int k = 0; k < 4; ++k) {
        auto v = MV::vector(ctx, k);
        for (Blade a = 0; a < 16; ++a)
            for (Blade b = 0; b < 16; ++b) {
                auto x = MV::blade(ctx, a), y = MV::blade(ctx, b);
                ASSERT_EQ(inner(wedge(v, x), y), inner(x, contract(v, y)));
            }
        EXPECT_EQ(wedge_matrix(v).adjoint(), interior_matrix(v));
    }
}

TEST(Clifford, Involutions) {
    auto ctx = AlgebraContext::standard(2);
    auto e1 = MV::vector(ctx, 0), e2 = MV::vector(ctx, 1), e3 = MV::vector(ctx, 2);
    auto e12 = wedge(e1, e2);
    EXPECT_EQ(antipodal(e12), e12);
    auto p = clifford_mul(clifford_mul(e1, e2), e3);
    auto rev = clifford_mul(clifford_mul(e3, e2), e1);
    EXPECT_EQ(transpose(p), rev);
    EXPECT_EQ(transpose(p), -p);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(transpose(MV::vector(ctx, k)), MV::vector(ctx, k));
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto x = random_mv(ctx, rng), y = random_mv(ctx, rng);
        ASSERT_EQ(antipodal(clifford_mul(x, y)), clifford_mul(antipodal(x), antipodal(y)));
        ASSERT_EQ(transpose(clifford_mul(x, y)), clifford_mul(transpose(y), transpose(x)));
        ASSERT_EQ(antipodal(antipodal(x)), x);
        ASSERT_EQ(transpose(transpose(x)), x);
    }
}

TEST(Clifford, HodgeStar) {
    for (int n = 1; n <= 3; ++n) {
        auto ctx = AlgebraContext::standard(n);
        auto vol = volume<ExactScalar>(ctx);
        EXPECT_EQ(hodge_star(MV::scalar(ctx, ExactScalar(1))), vol);
        // oracle: volume word reversed and multiplied out by hand rules
        auto w = word_of(Blade(ctx.algebra_dim() - 1));
        auto ww = w;
        ww.insert(ww.end(), w.begin(), w.end());
        auto [s, c] = oracle_word_product(ww);
        ASSERT_EQ(c, 0u);
        int m = ctx.dim();
        int alpha_t = ((m % 2) ? -1 : 1) * (((m * (m - 1) / 2) % 2) ? -1 : 1);
        EXPECT_EQ(hodge_star(vol), MV::scalar(ctx, ExactScalar(alpha_t * s)));
    }
    auto ctx = AlgebraContext::standard(2);
    auto star = hodge_star_matrix<ExactScalar>(ctx);
    auto star2 = star * star;
    for (int p = 0; p <= 4; ++p) {
        auto P = degree_projector<ExactScalar>(ctx, p);
        auto restricted = star2 * P;
        bool plus = restricted == P, minus = restricted == -P;
        EXPECT_TRUE(plus || minus) << "degree " << p;
    }
}

TEST(Clifford, ComplexConjugation) {
    auto ctx = AlgebraContext::standard(2);
    auto e1 = MV::vector(ctx, 0);
    EXPECT_EQ(conjugate_c(e1 * ExactScalar::i()), e1 * -ExactScalar::i());
    EXPECT_EQ(conjugate_c(epsilon(e1)), epsilon_bar(e1));
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto x = random_mv(ctx, rng);
        ASSERT_EQ(conjugate_c(conjugate_c(x)), x);
    }
}

TEST(Clifford, BladeIdentificationIsNotAnAlgebraMap) {
    auto ctx = AlgebraContext::standard(1);
    auto e1 = MV::vector(ctx, 0);
    EXPECT_NE(clifford_mul(e1, e1), wedge(e1, e1));
}

TEST(Clifford, JOperators) {
    auto ctx = AlgebraContext::standard(2);
    auto Jalg = J_alg_matrix<ExactScalar>(ctx);
    auto Jder = J_der_matrix<ExactScalar>(ctx);
    auto e1 = MV::vector(ctx, 0), e2 = MV::vector(ctx, 1);
    auto img = MV::from_dense(ctx, Jalg.apply(clifford_mul(e1, e2).dense()));
    EXPECT_EQ(img, clifford_mul(apply_J(e1), apply_J(e2)));
    auto Je1 = apply_J(e1);
    EXPECT_TRUE(Jder.apply(wedge(e1, Je1).dense()) == std::vector<ExactScalar>(16, ExactScalar(0)));
    std::mt19937 rng(3);
    auto L = [&](const MV& x) { return left_mul_matrix(x); };
    for (int t = 0; t < 100; ++t) {
        auto x = random_mv(ctx, rng), y = random_mv(ctx, rng);
        auto xy = clifford_mul(x, y);
        auto Jx = MV::from_dense(ctx, Jalg.apply(x.dense())), Jy = MV::from_dense(ctx, Jalg.apply(y.dense()));
        ASSERT_EQ(MV::from_dense(ctx, Jalg.apply(xy.dense())), clifford_mul(Jx, Jy));
        auto Dx = MV::from_dense(ctx, Jder.apply(x.dense())), Dy = MV::from_dense(ctx, Jder.apply(y.dense()));
        ASSERT_EQ(MV::from_dense(ctx, Jder.apply(xy.dense())), clifford_mul(Dx, y) + clifford_mul(x, Dy));
        ASSERT_EQ(L(xy), L(x) * L(y));
    }
}

TEST(Clifford, RejectsBadJ) {
    RationalMatrix J{{0, 1}, {1, 0}};
    EXPECT_THROW(AlgebraContext(1, J), std::invalid_argument);
    RationalMatrix J2{{0, 2}, {mpq_class(-1, 2), 0}};
    EXPECT_THROW(AlgebraContext(1, J2), std::invalid_argument);
}
