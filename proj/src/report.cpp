#include "cliffordlab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

namespace cliff {

namespace {

// Terminal columns of a UTF-8 string: code points, minus combining marks.
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size();) {
        unsigned char c = s[i];
        std::size_t len = c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
        char32_t cp = len == 1 ? c : c & (0x7F >> len);
        for (std::size_t k = 1; k < len && i + k < s.size(); ++k) cp = (cp << 6) | (s[i + k] & 0x3F);
        bool combining = (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x20D0 && cp <= 0x20FF);
        if (!combining) ++w;
        i += len;
    }
    return w;
}

}  // namespace

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::text() const {
    std::size_t wid = 0, wanc = 0;
    for (const auto& c : checks) {
        wid = std::max(wid, c.id.size());
        wanc = std::max(wanc, display_width(c.anchor));
    }
    std::ostringstream os;
    os << "suite " << suite << "\n";
    for (const auto& c : checks) {
        char res[32];
        std::snprintf(res, sizeof res, "%.3e", c.residual);
        os << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(wid - c.id.size() + 2, ' ') << c.anchor
           << std::string(wanc - display_width(c.anchor) + 2, ' ') << "residual " << res;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    os << checks.size() - failures() << "/" << checks.size() << " passed\n";
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["status"] = c.pass ? "pass" : "fail";
        e["residual"] = c.residual;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j.dump(2) + "\n";
}

Report run_checks(const std::string& suite, const std::vector<Check>& checks, int jobs) {
    Report r;
    r.suite = suite;
    r.checks.resize(checks.size());
    auto run_one = [&](std::size_t k) {
        CheckResult res;
        try {
            res = checks[k].run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.id = checks[k].id;
        res.anchor = checks[k].anchor;
        r.checks[k] = std::move(res);
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < checks.size(); ++k) run_one(k);
        return r;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < checks.size(); k = next++) run_one(k);
        });
    for (auto& th : pool) th.join();
    return r;
}

template <class S>
CheckResult expect_zero(const std::string& id, const std::string& anchor, const Matrix<S>& m, double tol) {
    CheckResult r;
    r.id = id;
    r.anchor = anchor;
    r.pass = m.is_zero(tol);
    r.residual = m.max_abs();
    return r;
}

template <class S>
CheckResult compare(const std::string& id, const std::string& anchor, const Matrix<S>& lhs, const Matrix<S>& rhs,
                    double tol) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        CheckResult r{id, anchor, false, 0.0, "shape mismatch"};
        return r;
    }
    return expect_zero(id, anchor, lhs - rhs, tol);
}

CheckResult expect_true(const std::string& id, const std::string& anchor, bool ok, const std::string& detail) {
    return CheckResult{id, anchor, ok, ok ? 0.0 : 1.0, detail};
}

template CheckResult expect_zero(const std::string&, const std::string&, const Matrix<ExactScalar>&, double);
template CheckResult expect_zero(const std::string&, const std::string&, const Matrix<FloatScalar>&, double);
template CheckResult compare(const std::string&, const std::string&, const Matrix<ExactScalar>&,
                             const Matrix<ExactScalar>&, double);
template CheckResult compare(const std::string&, const std::string&, const Matrix<FloatScalar>&,
                             const Matrix<FloatScalar>&, double);

}  // namespace cliff
