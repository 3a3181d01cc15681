#pragma once

#include "cliffordlab/clifford.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliff {

// Raised for malformed or invalid manifold descriptions; `where` names the
// offending JSON field (e.g. "d.z[0][2]") or byte offset.
class ModelError : public std::runtime_error {
public:
    ModelError(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Left-invariant almost Hermitian structure on a unimodular Lie group, given
// on an orthonormal coframe e^1..e^{2n}. Frame and coframe are identified by
// the metric, so the same J matrix acts on both.
//
// Brackets follow d(e^k) = -sum_{i<j} c^k_{ij} e^i ^ e^j, [e_i, e_j] = sum_k c^k_{ij} e_k.
class LieModel {
public:
    LieModel(std::string name, int n, std::vector<std::string> coframe, std::vector<mpq_class> structure,
             RationalMatrix J);

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    const std::vector<std::string>& coframe() const { return ctx_->labels(); }
    const RationalMatrix& J() const { return ctx_->J(); }
    const AlgebraContext& context() const { return *ctx_; }

    // c^k_{ij}
    const mpq_class& c(int k, int i, int j) const { return c_[(k * dim() + i) * dim() + j]; }
    bool abelian() const;

    // d(e^k) as a 2-form
    template <class S> Multivector<S> d_of_coframe(int k) const;

    // Flags declared under "expected" in the manifold file (integrable, almost_kaehler, kaehler, balanced).
    std::map<std::string, bool> expected;

private:
    std::string name_;
    int n_;
    std::vector<mpq_class> c_;
    std::shared_ptr<const AlgebraContext> ctx_;
};

// Parses the manifold JSON and validates antisymmetry, Jacobi (d^2 = 0),
// unimodularity and J. Throws ModelError.
LieModel parse_model(const std::string& text, const std::string& fallback_name = "model");
LieModel load_model(const std::string& path);

// Resolves a catalog name ("kt") or a path ("x/kt.json"). The catalog directory
// is $CLIFFORD_LAB_CATALOG if set, else `default_dir`.
std::string resolve_model_path(const std::string& name_or_path, const std::string& default_dir);

// The Chevalley-Eilenberg differential on invariant forms, extended as a
// graded derivation from its values on the coframe.
template <class S> Matrix<S> ce_differential(const LieModel& m);

}  // namespace cliff
