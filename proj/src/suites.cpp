#include "cliffordlab/suites.hpp"

#include <sstream>

namespace cliff {

namespace {

void append(std::vector<Check>& out, std::vector<Check> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// x∧y∧w style rendering of an exact form
std::string form_str(const Multivector<ExactScalar>& x) {
    if (x.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, s] : x.terms()) {
        std::string coef = s.str();
        if (coef == "1")
            coef = first ? "" : " + ";
        else if (coef == "-1")
            coef = first ? "−" : " − ";
        else
            coef = (first ? "" : " + ") + ("(" + coef + ")");
        os << coef;
        bool f2 = true;
        for (int k = 0; k < x.context().dim(); ++k)
            if (b >> k & 1) {
                os << (f2 ? "" : "∧") << x.context().label(k);
                f2 = false;
            }
        if (b == 0) os << "1";
        first = false;
    }
    return os.str();
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& tag) {
    if (tag == "hermitian") return Suite::hermitian;
    if (tag == "kaehler") return Suite::kaehler;
    if (tag == "appendix") return Suite::appendix;
    if (tag == "bochner") return Suite::bochner;
    if (tag == "laplacian") return Suite::laplacian;
    return std::nullopt;
}

std::string suite_tag(Suite s) {
    switch (s) {
        case Suite::hermitian: return "hermitian";
        case Suite::kaehler: return "kaehler";
        case Suite::appendix: return "appendix";
        case Suite::bochner: return "bochner";
        case Suite::laplacian: return "laplacian";
    }
    return "?";
}

template <class S>
std::vector<Check> suite_checks(const DiracOperators<S>& ops, Suite suite, const std::vector<mpq_class>& ts) {
    const auto& f = *ops.forms;
    std::vector<Check> c;
    if (!f.model.expected.empty())
        c.push_back({"model.expected", "declared flags: N = 0, dω = 0, θ = 0", [fp = &f] {
                         const std::map<std::string, bool> computed{
                             {"integrable", fp->integrable},
                             {"almost_kaehler", fp->almost_kaehler},
                             {"kaehler", fp->integrable && fp->almost_kaehler},
                             {"balanced", fp->balanced}};
                         std::string bad;
                         for (const auto& [k, v] : fp->model.expected)
                             if (computed.at(k) != v) bad += (bad.empty() ? "" : ", ") + k + " is " + (v ? "false" : "true");
                         return CheckResult{"", "", bad.empty(), bad.empty() ? 0.0 : 1.0, bad};
                     }});
    switch (suite) {
        case Suite::hermitian:
            append(c, form_checks(f));
            append(c, dirac_checks(ops, ts));
            append(c, correspondence_checks(ops, ts));
            append(c, laplacian_checks(ops));
            append(c, harmonic_checks(ops));
            break;
        case Suite::kaehler:
            if (!f.almost_kaehler)
                throw SuiteRefused("suite kaehler needs dω = 0, but dω ≠ 0 on " + f.model.name() + " (dω = " +
                                   form_str(apply_operator(ce_differential<ExactScalar>(f.model),
                                                           fundamental_form<ExactScalar>(f.ctx()))) +
                                   ")");
            append(c, almost_kaehler_form_checks(f));
            append(c, almost_kaehler_dirac_checks(ops));
            append(c, almost_kaehler_harmonic_checks(ops));
            break;
        case Suite::appendix: append(c, appendix_checks<S>(f.model, ts, f.tol)); break;
        case Suite::bochner: append(c, bochner_checks(ops, ts)); break;
        case Suite::laplacian:
            append(c, laplacian_checks(ops));
            append(c, harmonic_checks(ops));
            break;
    }
    return c;
}

std::vector<std::string> algebra_check_names() { return {"sl2", "correspondence", "bigrading", "hodge-aut", "all"}; }

template <class S>
std::vector<Check> algebra_checks(const Sl2Operators<S>& ops, const std::string& which, double tol) {
    std::vector<Check> c;
    const bool all = which == "all";
    if (all || which == "sl2") append(c, sl2_checks(ops, tol));
    if (all || which == "correspondence") append(c, correspondence_checks(ops, tol));
    if (all || which == "bigrading") append(c, bigrading_checks(ops, tol));
    if (all || which == "hodge-aut") append(c, hodge_aut_checks(ops, tol));
    return c;
}

std::string model_summary(const LieModel& model) {
    auto dw = apply_operator(ce_differential<ExactScalar>(model), fundamental_form<ExactScalar>(model.context()));
    Geometry<mpq_class> geo(model);
    auto N = geo.nijenhuis();
    bool n_zero = true;
    for (int a = 0; a < geo.m; ++a)
        for (int b = 0; b < geo.m; ++b)
            for (int k = 0; k < geo.m; ++k) n_zero = n_zero && N(a, b, k) == 0;
    std::ostringstream os;
    os << "model " << model.name() << "  n=" << model.n() << "  dω = " << form_str(dw) << "  N " << (n_zero ? "= 0" : "≠ 0")
       << "\n";
    return os.str();
}

#define CLIFF_INSTANTIATE(S)                                                                                   \
    template std::vector<Check> suite_checks(const DiracOperators<S>&, Suite, const std::vector<mpq_class>&); \
    template std::vector<Check> algebra_checks(const Sl2Operators<S>&, const std::string&, double);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
