#pragma once

#include "cliffordlab/matrix.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cliff {

struct CheckResult {
    std::string id;
    std::string anchor;  // the identity as written, e.g. "[L, Lbar] = H"
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

// A deferred check; suites build lists of these so they can run in parallel.
struct Check {
    std::string id;
    std::string anchor;
    std::function<CheckResult()> run;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
    std::string text() const;
    std::string json() const;
    void append(const Report& other);
};

// Runs checks on up to `jobs` threads; results keep the input order.
// An exception inside a check becomes a failing result.
Report run_checks(const std::string& suite, const std::vector<Check>& checks, int jobs = 1);

// Pass iff every entry of lhs - rhs is zero (exactly, or within tol in float mode).
template <class S>
CheckResult compare(const std::string& id, const std::string& anchor, const Matrix<S>& lhs, const Matrix<S>& rhs,
                    double tol);
template <class S>
CheckResult expect_zero(const std::string& id, const std::string& anchor, const Matrix<S>& m, double tol);
CheckResult expect_true(const std::string& id, const std::string& anchor, bool ok, const std::string& detail = "");

}  // namespace cliff
