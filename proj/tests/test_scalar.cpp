#include "cliffordlab/scalar.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

using cliff::ExactScalar;
using cliff::FloatScalar;

namespace {

// Independent oracle: coefficients on the basis {1, i, r, i r} with r^2 = 2,
// multiplied through an explicit structure table.
using Coeffs = std::array<mpq_class, 4>;

Coeffs oracle_mul(const Coeffs& x, const Coeffs& y) {
    // basis index bits: bit0 = i, bit1 = r
    Coeffs out{0, 0, 0, 0};
    const int map[4] = {0, 1, 2, 3};  // a, b, c, d order = 1, i, r, ir
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t) {
            int ia = s & 1, ra = s >> 1, ib = t & 1, rb = t >> 1;
            mpq_class f = x[map[s]] * y[map[t]];
            if (ia && ib) f = -f;
            if (ra && rb) f *= 2;
            out[((ia ^ ib) | ((ra ^ rb) << 1))] += f;
        }
    return out;
}

Coeffs coeffs(const ExactScalar& x) {
    // ExactScalar stores a + b i + c r + d i r
    return {x.a(), x.b(), x.c(), x.d()};
}

ExactScalar from_coeffs(const Coeffs& c) { return ExactScalar(c[0], c[1], c[2], c[3]); }

ExactScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return ExactScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                       mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST(Scalar, ZetaSquaredIsMinusI) {
    Coeffs zeta{0, 0, mpq_class(1, 2), mpq_class(-1, 2)};
    ExactScalar expected = from_coeffs(oracle_mul(zeta, zeta));
    EXPECT_EQ(expected, -ExactScalar::i());
    EXPECT_EQ(cliff::root_of_unity_8(1) * cliff::root_of_unity_8(1), expected);
    EXPECT_EQ(cliff::root_of_unity_8(2), expected);
}

TEST(Scalar, ConjugateOfI) { EXPECT_EQ(ExactScalar::i().conj(), -ExactScalar::i()); }

TEST(Scalar, ConjugationFixesSqrt2) {
    ExactScalar x(1, 2, 3, 4);
    EXPECT_EQ(x.conj(), ExactScalar(1, -2, 3, -4));
}

TEST(Scalar, DifferenceOfSquares) {
    ExactScalar a = ExactScalar(1) + ExactScalar::sqrt2();
    ExactScalar b = ExactScalar(-1) + ExactScalar::sqrt2();
    EXPECT_EQ(a * b, ExactScalar(1));
}

TEST(Scalar, RootsOfUnity) {
    EXPECT_EQ(cliff::root_of_unity_8(0), ExactScalar(1));
    EXPECT_EQ(cliff::root_of_unity_8(4), ExactScalar(-1));
    ExactScalar z = cliff::root_of_unity_8(1);
    ExactScalar p(1);
    for (int k = 0; k < 8; ++k) {
        EXPECT_EQ(p, cliff::root_of_unity_8(k)) << "k=" << k;
        EXPECT_EQ(cliff::root_of_unity_8(k), cliff::root_of_unity_8(k + 8));
        EXPECT_EQ(cliff::root_of_unity_8(k), cliff::root_of_unity_8(k - 16));
        p *= z;
    }
    EXPECT_EQ(p, ExactScalar(1));
}

TEST(Scalar, FloatRootsMatchExact) {
    for (int k = -9; k < 9; ++k) {
        FloatScalar f = cliff::ScalarTraits<FloatScalar>::root8(k);
        EXPECT_LT(std::abs(f - cliff::root_of_unity_8(k).to_complex()), 1e-14);
    }
}

TEST(Scalar, DivisionByZeroIsAnError) {
    EXPECT_FALSE(ExactScalar(0).try_inverse().has_value());
    EXPECT_THROW(ExactScalar(1) / ExactScalar(0), std::domain_error);
}

TEST(Scalar, FieldPropertiesOnRandomSamples) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
        ASSERT_EQ(x * y, from_coeffs(oracle_mul(coeffs(x), coeffs(y))));
        if (!x.is_zero()) ASSERT_EQ(x * *x.try_inverse(), ExactScalar(1));
    }
}

TEST(Scalar, FloatEmbeddingIsRingHomomorphism) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        ExactScalar prod(1);
        FloatScalar fprod(1.0, 0.0);
        int len = 1 + trial % 8;
        for (int k = 0; k < len; ++k) {
            // unit magnitude: random 8th root times a rational of modulus 1
            ExactScalar u = cliff::root_of_unity_8(rng() % 8);
            if (rng() % 2) u = -u;
            prod *= u;
            fprod *= u.to_complex();
        }
        ASSERT_LT(std::abs(prod.to_complex() - fprod), 1e-12);
        ExactScalar x = random_scalar(rng), y = random_scalar(rng);
        ASSERT_LT(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())), 1e-12);
    }
}

TEST(Scalar, ParseRational) {
    EXPECT_EQ(cliff::parse_rational("1"), mpq_class(1));
    EXPECT_EQ(cliff::parse_rational("1/1"), mpq_class(1));
    EXPECT_EQ(cliff::parse_rational("-3/6"), mpq_class(-1, 2));
    EXPECT_THROW(cliff::parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(cliff::parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(cliff::parse_rational(""), std::invalid_argument);
}
