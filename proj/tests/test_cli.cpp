#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI through the shell; stderr is folded into the output.
Run cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" CLIFFORDLAB_CLI "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path d = fs::temp_directory_path() / "cliffordlab_cli_test";
    fs::create_directories(d);
    return d / name;
}

int count_lines(const std::string& s, const std::string& prefix) {
    int n = 0;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

const std::string kCatalog = CLIFFORDLAB_CATALOG_DIR;

}  // namespace

TEST(Cli, KTDiamond) {
    auto r = cli("diamond --manifold " + kCatalog + "/kt.json --family eps-delbh");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("    1\n  1   1\n0   2   0\n  1   1\n    1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("invariant forms"), std::string::npos);
}

TEST(Cli, TorusDiamondBinomial) {
    auto r = cli("diamond --manifold torus4 --family d");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("    1\n  2   2\n1   4   1\n  2   2\n    1\n"), std::string::npos) << r.out;
}

TEST(Cli, RsTable) {
    auto r = cli("diamond --manifold kt --family D --grading rs");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(r,s) = (0,0)  3"), std::string::npos) << r.out;
}

TEST(Cli, DiamondJsonSchemaAndDeterminism) {
    auto a = scratch("a.json"), b = scratch("b.json");
    ASSERT_EQ(cli("diamond --manifold kt --family eps-delbh --json " + a.string()).code, 0);
    ASSERT_EQ(cli("diamond --manifold kt --family eps-delbh --json " + b.string()).code, 0);
    std::string ja = slurp(a);
    EXPECT_EQ(ja, slurp(b));
    EXPECT_NE(ja.find("\"model\": \"kt\""), std::string::npos);
    EXPECT_NE(ja.find("\"family\": \"eps-delbh\""), std::string::npos);
    EXPECT_NE(ja.find("\"grading\": \"pq\""), std::string::npos);
    EXPECT_NE(ja.find("[1, 1, 2]"), std::string::npos);
    EXPECT_NE(ja.find("\"invariant_forms\": true"), std::string::npos);
}

TEST(Cli, AlgebraCounts) {
    auto r = cli("algebra --n 2 --check sl2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out, "PASS"), 3);
    r = cli("algebra --n 3 --check hodge-aut");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out, "PASS"), 3);
}

TEST(Cli, InputErrors) {
    auto r = cli("algebra --n 5");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("n out of supported range"), std::string::npos);
    EXPECT_EQ(cli("diamond --manifold kt --family dbar").code, 2);
    EXPECT_EQ(cli("diamond --manifold kt --family d --grading qp").code, 2);
    EXPECT_EQ(cli("verify --manifold kt --suite nonsense").code, 2);
    EXPECT_EQ(cli("verify --manifold kt --t 1/0x").code, 2);
    EXPECT_EQ(cli("verify --manifold no_such_model").code, 2);
    EXPECT_EQ(cli("verify").code, 2);
    auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"n":2,"coframe":["x","y","z"],"J":{}})";
    r = cli("verify --manifold " + bad.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("coframe"), std::string::npos) << r.out;
}

TEST(Cli, KaehlerGate) {
    auto r = cli("verify --manifold kt --suite kaehler");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("dω ≠ 0"), std::string::npos) << r.out;
    EXPECT_EQ(cli("verify --manifold kt_ak --suite kaehler").code, 0);
}

TEST(Cli, HermitianReport) {
    auto r = cli("verify --manifold kt.json --suite hermitian --t -1,0,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_GE(count_lines(r.out, "PASS"), 30);
    EXPECT_EQ(count_lines(r.out, "FAIL"), 0);
    EXPECT_NE(r.out.find("dω = x∧y∧w  N = 0"), std::string::npos);
    // every report line: status, id, anchor, residual
    std::regex line(R"((PASS|FAIL)  \S+ +\S.*  residual .*)");
    std::istringstream is(r.out);
    for (std::string l; std::getline(is, l);)
        if (l.rfind("PASS", 0) == 0) EXPECT_TRUE(std::regex_match(l, line)) << l;
}

TEST(Cli, IdentityFailureExitCode) {
    // declared flags contradicting the structure fail the model.expected identity
    auto f = scratch("kt_wrong.json");
    std::ofstream(f) << R"({"name":"kt_wrong","n":2,"coframe":["x","y","z","w"],"d":{"z":[["x","y","1"]]},
                          "J":{"y":"x","x":"-y","z":"w","w":"-z"},"expected":{"almost_kaehler":true}})";
    auto r = cli("verify --manifold " + f.string() + " --suite laplacian");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL  model.expected"), std::string::npos) << r.out;
}

TEST(Cli, ReportJsonDeterministicAcrossJobs) {
    auto a = scratch("r1.json"), b = scratch("r2.json");
    auto r1 = cli("verify --manifold kt --suite bochner --t -1,1 --json " + a.string());
    auto r2 = cli("verify --manifold kt --suite bochner --t -1,1 --jobs 3 --json " + b.string());
    EXPECT_EQ(r1.code, 0);
    EXPECT_EQ(r1.out, r2.out);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_NE(slurp(a).find("\"anchor\""), std::string::npos);
}

TEST(Cli, FloatMode) {
    auto r = cli("verify --manifold kt --suite hermitian --mode float --tol 1e-9");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out, "FAIL"), 0);
    auto d = cli("diamond --manifold kt --family eps-delbh --mode float");
    EXPECT_NE(d.out.find("0   2   0"), std::string::npos);
}

TEST(Cli, CatalogEnvironmentOverride) {
    auto dir = scratch("catalog");
    fs::create_directories(dir);
    fs::copy_file(kCatalog + "/kt.json", dir / "elsewhere.json", fs::copy_options::overwrite_existing);
    auto r = cli("diamond --manifold elsewhere --family eps-delbh", "CLIFFORD_LAB_CATALOG=" + dir.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(cli("diamond --manifold elsewhere --family eps-delbh").code, 2);
}
