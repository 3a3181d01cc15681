#include "cliffordlab/lie_model.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace cliff {

using json = nlohmann::json;

namespace {

void validate(const LieModel& m) {
    const int dim = m.dim();
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (m.c(k, i, j) != -m.c(k, j, i))
                    throw ModelError("d", "structure constants are not antisymmetric");
    for (int j = 0; j < dim; ++j) {
        mpq_class tr = 0;
        for (int k = 0; k < dim; ++k) tr += m.c(k, k, j);
        if (tr != 0)
            throw ModelError("d", "Lie algebra is not unimodular (trace of ad(" + m.coframe()[j] + ") = " +
                                      tr.get_str() + ")");
    }
    // d^2 is a derivation, so it vanishes iff it vanishes on the coframe
    for (int k = 0; k < dim; ++k) {
        auto dk = m.d_of_coframe<ExactScalar>(k);
        Multivector<ExactScalar> dd(m.context());
        for (int i = 0; i < dim; ++i) {
            auto ci = contract(Multivector<ExactScalar>::vector(m.context(), i), dk);
            if (!ci.is_zero()) dd += wedge(m.d_of_coframe<ExactScalar>(i), ci);
        }
        if (!dd.is_zero())
            throw ModelError("d." + m.coframe()[k], "Jacobi identity fails: d(d " + m.coframe()[k] + ") != 0");
    }
}

mpq_class rational_field(const json& v, const std::string& where) {
    if (!v.is_string()) throw ModelError(where, "expected a rational as a string, e.g. \"1/2\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
        throw ModelError(where, "invalid rational '" + v.get<std::string>() + "'");
    }
}

}  // namespace

LieModel::LieModel(std::string name, int n, std::vector<std::string> coframe, std::vector<mpq_class> structure,
                   RationalMatrix J)
    : name_(std::move(name)), n_(n), c_(std::move(structure)) {
    if (n < 1) throw ModelError("n", "must be at least 1");
    const std::size_t dim = 2 * std::size_t(n);
    if (coframe.size() != dim) throw ModelError("coframe", "expected " + std::to_string(dim) + " names");
    if (c_.size() != dim * dim * dim) throw ModelError("d", "wrong number of structure constants");
    try {
        ctx_ = std::make_shared<const AlgebraContext>(n, std::move(J), std::move(coframe));
    } catch (const std::invalid_argument& e) {
        throw ModelError("J", e.what());
    }
    validate(*this);
}

bool LieModel::abelian() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

template <class S>
Multivector<S> LieModel::d_of_coframe(int k) const {
    Multivector<S> out(*ctx_);
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (c(k, i, j) != 0)
                out.add_term((Blade(1) << i) | (Blade(1) << j), ScalarTraits<S>::from_rational(-c(k, i, j)));
    return out;
}

template Multivector<ExactScalar> LieModel::d_of_coframe(int) const;
template Multivector<FloatScalar> LieModel::d_of_coframe(int) const;

LieModel parse_model(const std::string& text, const std::string& fallback_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelError("byte " + std::to_string(e.byte), "JSON syntax error");
    }
    if (!doc.is_object()) throw ModelError("", "top level must be an object");

    std::string name = fallback_name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ModelError("name", "expected a string");
        name = doc["name"].get<std::string>();
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ModelError("n", "missing or not an integer");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > 4) throw ModelError("n", "must be between 1 and 4");
    const int dim = 2 * n;

    if (!doc.contains("coframe") || !doc["coframe"].is_array()) throw ModelError("coframe", "missing list of names");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (std::size_t a = 0; a < doc["coframe"].size(); ++a) {
        const auto& v = doc["coframe"][a];
        std::string where = "coframe[" + std::to_string(a) + "]";
        if (!v.is_string()) throw ModelError(where, "expected a string");
        auto s = v.get<std::string>();
        if (s.empty() || s[0] == '-') throw ModelError(where, "invalid name '" + s + "'");
        if (!index.emplace(s, int(a)).second) throw ModelError(where, "duplicate name '" + s + "'");
        names.push_back(s);
    }
    if (int(names.size()) != dim) throw ModelError("coframe", "expected " + std::to_string(dim) + " names");

    auto lookup = [&](const json& v, const std::string& where) {
        if (!v.is_string()) throw ModelError(where, "expected a coframe name");
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) throw ModelError(where, "unknown coframe name '" + v.get<std::string>() + "'");
        return it->second;
    };

    std::vector<mpq_class> c(std::size_t(dim) * dim * dim);
    auto at = [&](int k, int i, int j) -> mpq_class& { return c[(std::size_t(k) * dim + i) * dim + j]; };
    if (doc.contains("d")) {
        if (!doc["d"].is_object()) throw ModelError("d", "expected an object");
        for (const auto& [key, terms] : doc["d"].items()) {
            std::string base = "d." + key;
            int k = lookup(json(key), base);
            if (!terms.is_array()) throw ModelError(base, "expected a list of [name, name, rational]");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                std::string where = base + "[" + std::to_string(t) + "]";
                const auto& term = terms[t];
                if (!term.is_array() || term.size() != 3)
                    throw ModelError(where, "expected [name, name, rational]");
                int i = lookup(term[0], where + "[0]");
                int j = lookup(term[1], where + "[1]");
                if (i == j) throw ModelError(where, "wedge of a covector with itself");
                mpq_class r = rational_field(term[2], where + "[2]");
                // d e^k gains r e^i ^ e^j, i.e. c^k_{ij} -= r
                at(k, i, j) -= r;
                at(k, j, i) += r;
            }
        }
    }

    RationalMatrix J(dim, std::vector<mpq_class>(dim));
    if (!doc.contains("J")) throw ModelError("J", "missing");
    const auto& jv = doc["J"];
    if (jv.is_object()) {
        std::set<int> seen;
        for (const auto& [key, val] : jv.items()) {
            std::string where = "J." + key;
            int j = lookup(json(key), where);
            seen.insert(j);
            if (!val.is_string()) throw ModelError(where, "expected a signed coframe name");
            auto s = val.get<std::string>();
            mpq_class sign = 1;
            if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
                if (s[0] == '-') sign = -1;
                s = s.substr(1);
            }
            J[lookup(json(s), where)][j] = sign;
        }
        if (int(seen.size()) != dim) throw ModelError("J", "must map every coframe element");
    } else if (jv.is_array()) {
        if (int(jv.size()) != dim) throw ModelError("J", "expected a " + std::to_string(dim) + "x" +
                                                         std::to_string(dim) + " matrix");
        for (int r = 0; r < dim; ++r) {
            std::string where = "J[" + std::to_string(r) + "]";
            if (!jv[r].is_array() || int(jv[r].size()) != dim) throw ModelError(where, "wrong row length");
            for (int col = 0; col < dim; ++col)
                J[r][col] = rational_field(jv[r][col], where + "[" + std::to_string(col) + "]");
        }
    } else {
        throw ModelError("J", "expected an object or a matrix");
    }
    LieModel model(name, n, names, std::move(c), std::move(J));
    if (doc.contains("expected")) {
        const auto& ex = doc["expected"];
        if (!ex.is_object()) throw ModelError("expected", "expected an object of flags");
        for (const auto& [key, v] : ex.items()) {
            if (key != "integrable" && key != "almost_kaehler" && key != "kaehler" && key != "balanced")
                throw ModelError("expected." + key, "unknown flag (integrable, almost_kaehler, kaehler, balanced)");
            if (!v.is_boolean()) throw ModelError("expected." + key, "expected true or false");
            model.expected[key] = v.get<bool>();
        }
    }
    return model;
}

LieModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), std::filesystem::path(path).stem().string());
}

std::string resolve_model_path(const std::string& name_or_path, const std::string& default_dir) {
    namespace fs = std::filesystem;
    if (fs::exists(name_or_path)) return name_or_path;
    std::string dir = default_dir;
    if (const char* env = std::getenv("CLIFFORD_LAB_CATALOG")) dir = env;
    fs::path stem = fs::path(name_or_path).filename();
    if (stem.extension() != ".json") stem += ".json";
    fs::path candidate = fs::path(dir) / stem;
    if (fs::exists(candidate)) return candidate.string();
    throw ModelError("", "no manifold file '" + name_or_path + "' (catalog: " + dir + ")");
}

template <class S>
Matrix<S> ce_differential(const LieModel& m) {
    const auto& ctx = m.context();
    Matrix<S> d(ctx.algebra_dim(), ctx.algebra_dim());
    for (int k = 0; k < m.dim(); ++k) {
        auto dk = m.d_of_coframe<S>(k);
        if (!dk.is_zero()) d += wedge_matrix(dk) * interior_matrix(Multivector<S>::vector(ctx, k));
    }
    return d;
}

template Matrix<ExactScalar> ce_differential(const LieModel&);
template Matrix<FloatScalar> ce_differential(const LieModel&);

}  // namespace cliff
