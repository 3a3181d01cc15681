#include "cliffordlab/lie_model.hpp"

#include <gtest/gtest.h>

using namespace cliff;
using MV = Multivector<ExactScalar>;

namespace {

LieModel catalog(const std::string& name) { return load_model(resolve_model_path(name, CLIFFORDLAB_CATALOG_DIR)); }

MV apply(const Matrix<ExactScalar>& m, const MV& x) { return MV::from_dense(x.context(), m.apply(x.dense())); }

std::string error_of(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ModelError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(LieModel, KodairaThurstonDifferential) {
    auto m = catalog("kt");
    const auto& ctx = m.context();
    auto x = MV::vector(ctx, 0), y = MV::vector(ctx, 1), w = MV::vector(ctx, 3);
    EXPECT_EQ(m.d_of_coframe<ExactScalar>(2), wedge(x, y));
    EXPECT_EQ(m.c(2, 0, 1), mpq_class(-1));
    auto d = ce_differential<ExactScalar>(m);
    EXPECT_TRUE((d * d).is_zero(0));
    // Jx = -y and Jz = w, so omega = x^Jx + z^Jz = -x^y + z^w and d omega = dz^w = x^y^w
    auto omega = wedge(x, apply_J(x)) + wedge(MV::vector(ctx, 2), apply_J(MV::vector(ctx, 2)));
    EXPECT_EQ(apply(d, omega), wedge(wedge(x, y), w));
    // d on 1-forms agrees with the coframe table
    for (int k = 0; k < 4; ++k) EXPECT_EQ(apply(d, MV::vector(ctx, k)), m.d_of_coframe<ExactScalar>(k));
}

TEST(LieModel, TorusIsAbelian) {
    auto m = catalog("torus4");
    EXPECT_TRUE(m.abelian());
    EXPECT_TRUE(ce_differential<ExactScalar>(m).is_zero(0));
}

TEST(LieModel, DSquaredVanishesOnCatalog) {
    for (auto name : {"kt", "kt_ak", "iwasawa"}) {
        auto m = catalog(name);
        auto d = ce_differential<ExactScalar>(m);
        EXPECT_TRUE((d * d).is_zero(0)) << name;
        EXPECT_FALSE(m.abelian()) << name;
    }
}

TEST(LieModel, IwasawaDimensions) {
    auto m = catalog("iwasawa");
    EXPECT_EQ(m.n(), 3);
    EXPECT_EQ(m.context().algebra_dim(), 64u);
    // Betti numbers of the Iwasawa manifold: 1,4,8,10,8,4,1
    auto d = ce_differential<ExactScalar>(m);
    std::vector<std::size_t> betti;
    for (int k = 0; k <= 6; ++k) {
        auto P = degree_projector<ExactScalar>(m.context(), k);
        std::size_t dimk = rank(P, 0);
        std::size_t rank_out = rank(d * P, 0);
        std::size_t rank_in = k ? rank(d * degree_projector<ExactScalar>(m.context(), k - 1), 0) : 0;
        betti.push_back(dimk - rank_out - rank_in);
    }
    EXPECT_EQ(betti, (std::vector<std::size_t>{1, 4, 8, 10, 8, 4, 1}));
}

TEST(LieModel, RejectsNonUnimodular) {
    auto msg = error_of(R"({"n":1,"coframe":["a","b"],"d":{"b":[["a","b","1"]]},"J":{"a":"b","b":"-a"}})");
    EXPECT_NE(msg.find("not unimodular"), std::string::npos) << msg;
}

TEST(LieModel, RejectsJacobiFailure) {
    // d(da) = db^c - b^dc = -b^a^e != 0
    auto msg = error_of(R"({"n":2,"coframe":["a","b","c","e"],
        "d":{"a":[["b","c","1"]],"b":[["a","c","1"]],"c":[["a","e","1"]]},
        "J":{"a":"b","b":"-a","c":"e","e":"-c"}})");
    EXPECT_NE(msg.find("Jacobi"), std::string::npos) << msg;
}

TEST(LieModel, ErrorMessagesNameTheField) {
    EXPECT_NE(error_of("{").find("byte"), std::string::npos);
    EXPECT_NE(error_of(R"({"n":1,"coframe":["a","b"],"d":{"b":[["a","q","1"]]},"J":{"a":"b","b":"-a"}})")
                  .find("d.b[0][1]"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"n":2,"coframe":["x","y","z","w"],"d":{"z":[["x","y","1/0"]]},"J":{"y":"x","x":"-y","z":"w","w":"-z"}})")
                  .find("d.z[0][2]: invalid rational"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"n":1,"coframe":["a","a"],"J":{}})").find("duplicate"), std::string::npos);
    EXPECT_NE(error_of(R"({"n":1,"coframe":["a","b"],"J":{"a":"a","b":"b"}})").find("J"), std::string::npos);
    EXPECT_NE(error_of(R"({"n":5,"coframe":[],"J":{}})").find("n:"), std::string::npos);
}

TEST(LieModel, MatrixFormOfJ) {
    auto m = parse_model(R"({"n":1,"coframe":["a","b"],"J":[["0","-1"],["1","0"]]})");
    EXPECT_EQ(m.J()[1][0], mpq_class(1));
    EXPECT_EQ(m.J()[0][1], mpq_class(-1));
}

TEST(LieModel, ResolveFailsCleanly) {
    EXPECT_THROW(resolve_model_path("no_such_manifold", CLIFFORDLAB_CATALOG_DIR), ModelError);
}

TEST(LieModel, ExpectedFlags) {
    auto m = parse_model(R"({"n":1,"coframe":["a","b"],"J":{"b":"a","a":"-b"},"expected":{"kaehler":true}})");
    EXPECT_EQ(m.expected.at("kaehler"), true);
    EXPECT_NE(error_of(R"({"n":1,"coframe":["a","b"],"J":{"b":"a","a":"-b"},"expected":{"flat":true}})")
                  .find("expected.flat"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"n":1,"coframe":["a","b"],"J":{"b":"a","a":"-b"},"expected":{"balanced":1}})")
                  .find("true or false"),
              std::string::npos);
}
