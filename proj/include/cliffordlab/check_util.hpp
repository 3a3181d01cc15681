#pragma once

// Small combinators shared by the identity suites.

#include "cliffordlab/clifford.hpp"
#include "cliffordlab/report.hpp"

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace cliff::check_util {

template <class S>
bool mv_zero(const Multivector<S>& x, double tol) {
    for (const auto& [b, s] : x.terms())
        if (!ScalarTraits<S>::is_zero(s, tol)) return false;
    return true;
}

template <class S>
CheckResult mv_eq(const Multivector<S>& a, const Multivector<S>& b, double tol) {
    auto diff = a - b;
    double res = 0;
    for (const auto& [bl, s] : diff.terms()) res = std::max(res, ScalarTraits<S>::abs(s));
    bool ok = mv_zero(diff, tol);
    return {"", "", ok, res, ok ? "" : "difference " + diff.str()};
}

inline CheckResult all_of(std::initializer_list<CheckResult> parts) {
    CheckResult out{"", "", true, 0.0, ""};
    for (const auto& p : parts) {
        out.pass = out.pass && p.pass;
        out.residual = std::max(out.residual, p.residual);
        if (!p.pass && out.detail.empty()) out.detail = p.detail;
    }
    return out;
}

inline CheckResult all_of(const std::vector<CheckResult>& parts) {
    CheckResult out{"", "", true, 0.0, ""};
    for (const auto& p : parts) {
        out.pass = out.pass && p.pass;
        out.residual = std::max(out.residual, p.residual);
        if (!p.pass && out.detail.empty()) out.detail = p.detail;
    }
    return out;
}

template <class S>
CheckResult zero(const Matrix<S>& m, double tol) {
    return expect_zero("", "", m, tol);
}

template <class S>
CheckResult eq(const Matrix<S>& a, const Matrix<S>& b, double tol) {
    return compare("", "", a, b, tol);
}

// Checks a relation and its adjoint together.
template <class S>
CheckResult zero_with_adjoint(const Matrix<S>& m, double tol) {
    return all_of({zero(m, tol), zero(m.adjoint(), tol)});
}

}  // namespace cliff::check_util
