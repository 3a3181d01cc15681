#include "cliffordlab/harmonics.hpp"

#include <gtest/gtest.h>

using namespace cliff;
using S = ExactScalar;
using Mat = Matrix<S>;

namespace {

LieModel catalog(const std::string& name) { return load_model(resolve_model_path(name, CLIFFORDLAB_CATALOG_DIR)); }

// Oracle: harmonic space as ker of the summed Laplacian, block dims by the
// rank formula dim(K ∩ im P) = dim K + rank P - rank [K | P].
template <class T>
std::map<Bidegree, std::size_t> oracle_dims(const DiracOperators<T>& o, Family f, Grading g) {
    const double tol = o.forms->tol;
    Matrix<T> L(o.dim(), o.dim());
    for (const auto& op : family_operators(o, f)) L += op * op.adjoint() + op.adjoint() * op;
    Matrix<T> K = nullspace(L, tol);
    std::map<Bidegree, std::size_t> out;
    for (const auto& [b, P] : grading_projectors(o, g)) {
        std::size_t d = K.cols() + rank(P, tol) - rank(hstack(K, P), tol);
        if (d) out[b] = d;
    }
    return out;
}

std::map<Bidegree, std::size_t> nonzero(const Diamond& d) {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [b, n] : d.dims)
        if (n) out[b] = n;
    return out;
}

using Rows = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST(Harmonics, FamilyTags) {
    for (auto tag : {"d", "delta", "delta-bar", "eps", "delbh", "eps-delbh", "D", "B", "B-Bt"}) {
        auto f = parse_family(tag);
        ASSERT_TRUE(f.has_value()) << tag;
        EXPECT_EQ(family_tag(*f), tag);
    }
    EXPECT_FALSE(parse_family("dbar").has_value());
    EXPECT_FALSE(parse_grading("qp").has_value());
    EXPECT_EQ(grading_tag(*parse_grading("rs")), "rs");
}

TEST(Harmonics, KTEpsDelbarHatDiamond) {
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    auto d = make_diamond(o, harmonic_space(o, Family::eps_delbh, Grading::pq));
    EXPECT_EQ(d.rows(), (Rows{{1}, {1, 1}, {0, 2, 0}, {1, 1}, {1}}));
    EXPECT_EQ(d.ascii(), "    1\n  1   1\n0   2   0\n  1   1\n    1\n");
}

TEST(Harmonics, TorusDiamondIsBinomial) {
    FormOperators<S> f(catalog("torus4"), 0);
    DiracOperators<S> o(f);
    auto d = make_diamond(o, harmonic_space(o, Family::d, Grading::pq));
    const std::size_t c2[] = {1, 2, 1};
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) EXPECT_EQ(d.dims.at({p, q}), c2[p] * c2[q]);
    EXPECT_EQ(d.rows(), (Rows{{1}, {2, 2}, {1, 4, 1}, {2, 2}, {1}}));
}

TEST(Harmonics, BlocksMatchRankOracle) {
    for (auto name : {"kt", "kt_ak", "torus4"}) {
        FormOperators<S> f(catalog(name), 0);
        DiracOperators<S> o(f);
        for (auto fam : {Family::d, Family::delta, Family::eps_delbh, Family::D, Family::B_Bt})
            for (auto g : {Grading::pq, Grading::rs})
                EXPECT_EQ(nonzero(make_diamond(o, harmonic_space(o, fam, g))), oracle_dims(o, fam, g))
                    << name << " " << family_tag(fam) << " " << grading_tag(g);
    }
}

TEST(Harmonics, KTDeltaDiamondFrozen) {
    // values from the rank oracle above
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    auto h = harmonic_space(o, Family::delta, Grading::pq);
    EXPECT_EQ(h.dim(), 12u);
    EXPECT_EQ(make_diamond(o, h).rows(), (Rows{{1}, {2, 1}, {1, 2, 1}, {1, 2}, {1}}));
    auto r = make_diamond(o, harmonic_space(o, Family::D, Grading::rs));
    EXPECT_EQ(r.rows(), (Rows{{0}, {1, 1}, {1, 3, 1}, {1, 1}, {0}}));
}

TEST(Harmonics, RsTableShape) {
    Diamond d;
    d.grading = Grading::rs;
    d.n = 3;
    d.dims[{0, 3}] = 7;
    d.dims[{-3, 0}] = 2;
    auto rows = d.rows();
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], std::vector<std::size_t>{7});
    EXPECT_EQ(rows[3], (std::vector<std::size_t>{2, 0, 0, 0}));
}

TEST(Harmonics, ChecksPassOnCatalog) {
    for (auto name : {"kt", "kt_ak", "torus4", "iwasawa"}) {
        FormOperators<S> f(catalog(name), 0);
        DiracOperators<S> o(f);
        auto r = run_checks(name, harmonic_checks(o));
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << name << " " << c.id << " " << c.detail;
        if (f.almost_kaehler) {
            r = run_checks(name, almost_kaehler_harmonic_checks(o));
            for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << name << " " << c.id << " " << c.detail;
        }
    }
}

TEST(Harmonics, AlmostKaehlerChecksFailOnKT) {
    FormOperators<S> f(catalog("kt"), 0);
    DiracOperators<S> o(f);
    EXPECT_GT(run_checks("kt", almost_kaehler_harmonic_checks(o)).failures(), 0u);
}

TEST(Harmonics, FloatDimsMatchExact) {
    for (auto name : {"kt", "kt_ak", "torus4", "iwasawa"}) {
        FormOperators<S> fe(catalog(name), 0);
        DiracOperators<S> oe(fe);
        FormOperators<FloatScalar> ff(catalog(name), 1e-9);
        DiracOperators<FloatScalar> of(ff);
        for (auto fam : {Family::d, Family::delta, Family::eps_delbh, Family::D, Family::B_Bt})
            for (auto g : {Grading::pq, Grading::rs})
                EXPECT_EQ(make_diamond(oe, harmonic_space(oe, fam, g)).dims,
                          make_diamond(of, harmonic_space(of, fam, g)).dims)
                    << name << " " << family_tag(fam) << " " << grading_tag(g);
    }
}
