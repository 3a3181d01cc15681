#pragma once

#include "cliffordlab/harmonics.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliff {

enum class Suite { hermitian, kaehler, appendix, bochner, laplacian };

std::optional<Suite> parse_suite(const std::string& tag);
std::string suite_tag(Suite s);

// A suite whose hypotheses the model does not meet, e.g. kaehler with d omega != 0.
class SuiteRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks of one suite on a model; throws SuiteRefused when gated out.
// The checks refer to `ops`, which must outlive them.
template <class S>
std::vector<Check> suite_checks(const DiracOperators<S>& ops, Suite suite, const std::vector<mpq_class>& ts);

// Pure-algebra checks on Cl(R^2n): "sl2", "correspondence", "bigrading", "hodge-aut" or "all".
std::vector<std::string> algebra_check_names();
template <class S> std::vector<Check> algebra_checks(const Sl2Operators<S>& ops, const std::string& which, double tol);

// Model facts printed ahead of a report: d omega and the Nijenhuis tensor, exactly.
std::string model_summary(const LieModel& model);

}  // namespace cliff
