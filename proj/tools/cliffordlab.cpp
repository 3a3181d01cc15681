// Command-line front end: algebra, verify and diamond.

#include "cliffordlab/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cliff;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string catalog_dir() {
    if (const char* env = std::getenv("CLIFFORD_LAB_CATALOG")) return env;
    return CLIFFORDLAB_CATALOG_DIR;
}

std::vector<mpq_class> parse_ts(const std::string& csv) {
    std::vector<mpq_class> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        mpq_class q;
        if (item.empty() || q.set_str(item, 10) != 0) throw InputError("bad value in --t: '" + item + "'");
        q.canonicalize();
        out.push_back(q);
    }
    if (out.empty()) throw InputError("--t is empty");
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

struct Common {
    std::string mode = "exact";
    double tol = 1e-9;
    std::string json;
    int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol", c.tol, "float-mode tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--json", c.json, "write the result as JSON to this path");
    cmd->add_option("--jobs", c.jobs, "threads for independent identities")->check(CLI::PositiveNumber);
}

int finish(const Report& r, const Common& c) {
    std::cout << r.text();
    if (!c.json.empty()) write_file(c.json, r.json() + "\n");
    return r.all_pass() ? kPass : kFail;
}

template <class S>
int run_algebra(int n, const std::string& check, const Common& c) {
    const double tol = c.mode == "exact" ? 0 : c.tol;
    auto ctx = AlgebraContext::standard(n);
    auto ops = build_sl2<S>(ctx);
    auto checks = algebra_checks(ops, check, tol);
    return finish(run_checks("algebra n=" + std::to_string(n) + " " + check, checks, c.jobs), c);
}

template <class S>
int run_verify(const LieModel& model, Suite suite, const std::vector<mpq_class>& ts, const Common& c) {
    const double tol = c.mode == "exact" ? 0 : c.tol;
    std::cout << model_summary(model);
    FormOperators<S> f(model, tol);
    DiracOperators<S> o(f);
    auto checks = suite_checks(o, suite, ts);
    std::string tlist;
    for (const auto& t : ts) tlist += (tlist.empty() ? "" : ",") + t.get_str();
    return finish(run_checks(suite_tag(suite) + " on " + model.name() + " t=" + tlist + " mode=" + c.mode, checks,
                             c.jobs),
                  c);
}

template <class S>
int run_diamond(const LieModel& model, Family fam, Grading g, const Common& c) {
    const double tol = c.mode == "exact" ? 0 : c.tol;
    FormOperators<S> f(model, tol);
    DiracOperators<S> o(f);
    auto d = make_diamond(o, harmonic_space(o, fam, g));
    const std::string idx = g == Grading::pq ? "(p,q)" : "(r,s)";
    std::cout << "harmonic " << d.family << " on " << d.model << ", " << idx << " grading, invariant forms\n\n"
              << d.ascii() << "\n";
    for (const auto& [b, n] : d.dims) std::cout << idx << " = (" << b.first << "," << b.second << ")  " << n << "\n";

    // one dims entry per line
    std::ostringstream j;
    j << "{\n  \"model\": " << nlohmann::json(d.model).dump() << ",\n  \"family\": " << nlohmann::json(d.family).dump()
      << ",\n  \"grading\": \"" << grading_tag(g) << "\",\n  \"dims\": [";
    bool first = true;
    for (const auto& [b, n] : d.dims) {
        j << (first ? "\n    " : ",\n    ") << "[" << b.first << ", " << b.second << ", " << n << "]";
        first = false;
    }
    j << "\n  ],\n  \"invariant_forms\": true\n}\n";
    if (!c.json.empty()) write_file(c.json, j.str());
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford and Hermitian identity checker for left-invariant structures on Lie groups"};
    app.require_subcommand(1);

    Common common;
    int n = 0;
    std::string check = "all";
    auto* algebra = app.add_subcommand("algebra", "sl(2), correspondence, bigrading and g checks on Cl(R^2n)");
    algebra->add_option("--n", n, "complex dimension")->required();
    algebra->add_option("--check", check, "sl2 | correspondence | bigrading | hodge-aut | all");
    add_common(algebra, common);

    std::string manifold, suite = "hermitian", tcsv = "-1,0,1,2";
    auto* verify = app.add_subcommand("verify", "run an identity suite on a manifold");
    verify->add_option("--manifold", manifold, "manifold JSON path or catalog name")->required();
    verify->add_option("--suite", suite, "hermitian | kaehler | appendix | bochner | laplacian");
    verify->add_option("--t", tcsv, "comma-separated rational parameters of the canonical connections");
    add_common(verify, common);

    std::string family, grading = "pq";
    auto* diamond = app.add_subcommand("diamond", "dimension table of a harmonic space");
    diamond->add_option("--manifold", manifold, "manifold JSON path or catalog name")->required();
    diamond->add_option("--family", family, "d | delta | eps-delbh | D | B-Bt (also delta-bar, eps, delbh, B)")
        ->required();
    diamond->add_option("--grading", grading, "pq | rs");
    add_common(diamond, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    const bool exact = common.mode == "exact";
    try {
        if (algebra->parsed()) {
            if (n < 1 || n > 4) throw InputError("n out of supported range (1..4)");
            auto names = algebra_check_names();
            if (std::find(names.begin(), names.end(), check) == names.end())
                throw InputError("unknown check '" + check + "'");
            return exact ? run_algebra<ExactScalar>(n, check, common) : run_algebra<FloatScalar>(n, check, common);
        }
        auto model = load_model(resolve_model_path(manifold, catalog_dir()));
        if (verify->parsed()) {
            auto s = parse_suite(suite);
            if (!s) throw InputError("unknown suite '" + suite + "'");
            auto ts = parse_ts(tcsv);
            return exact ? run_verify<ExactScalar>(model, *s, ts, common)
                         : run_verify<FloatScalar>(model, *s, ts, common);
        }
        auto fam = parse_family(family);
        if (!fam) throw InputError("unknown family '" + family + "' (d, delta, delta-bar, eps, delbh, eps-delbh, D, B, B-Bt)");
        auto g = parse_grading(grading);
        if (!g) throw InputError("unknown grading '" + grading + "' (pq, rs)");
        return exact ? run_diamond<ExactScalar>(model, *fam, *g, common)
                     : run_diamond<FloatScalar>(model, *fam, *g, common);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const SuiteRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kInputError;
    }
}
