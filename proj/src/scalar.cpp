#include "cliffordlab/scalar.hpp"

#include <cmath>
#include <sstream>

namespace cliff {

namespace {

// (p + q r)(p' + q' r) with r^2 = 2, skipping zero parts
RealSqrt2 mul(const RealSqrt2& x, const RealSqrt2& y) {
    const bool xq = sgn(x.q) != 0, yq = sgn(y.q) != 0;
    if (!xq && !yq) return {x.p * y.p, mpq_class(0)};
    if (!xq) return {x.p * y.p, x.p * y.q};
    if (!yq) return {x.p * y.p, x.q * y.p};
    return {x.p * y.p + 2 * x.q * y.q, x.p * y.q + x.q * y.p};
}

void add_mul(RealSqrt2& acc, const RealSqrt2& x, const RealSqrt2& y, int sign) {
    if (x.is_zero() || y.is_zero()) return;
    const bool xq = sgn(x.q) != 0, yq = sgn(y.q) != 0;
    if (!xq && !yq) {
        if (sign > 0) acc.p += x.p * y.p; else acc.p -= x.p * y.p;
        return;
    }
    RealSqrt2 t = mul(x, y);
    if (sign > 0) { acc.p += t.p; acc.q += t.q; } else { acc.p -= t.p; acc.q -= t.q; }
}

}  // namespace

double RealSqrt2::to_double() const { return p.get_d() + q.get_d() * std::sqrt(2.0); }

ExactScalar ExactScalar::conj() const {
    ExactScalar r = *this;
    r.im_.p = -r.im_.p;
    r.im_.q = -r.im_.q;
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.re_.p = -r.re_.p; r.re_.q = -r.re_.q;
    r.im_.p = -r.im_.p; r.im_.q = -r.im_.q;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    re_.p += o.re_.p; re_.q += o.re_.q;
    im_.p += o.im_.p; im_.q += o.im_.q;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    re_.p -= o.re_.p; re_.q -= o.re_.q;
    im_.p -= o.im_.p; im_.q -= o.im_.q;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    ExactScalar r;
    r.add_product(*this, o);
    *this = std::move(r);
    return *this;
}

void ExactScalar::add_product(const ExactScalar& x, const ExactScalar& y) {
    add_mul(re_, x.re_, y.re_, +1);
    add_mul(re_, x.im_, y.im_, -1);
    add_mul(im_, x.re_, y.im_, +1);
    add_mul(im_, x.im_, y.re_, +1);
}

std::optional<ExactScalar> ExactScalar::try_inverse() const {
    if (is_zero()) return std::nullopt;
    // 1/(u + iv) = (u - iv)/(u^2 + v^2), and 1/(p + q r) = (p - q r)/(p^2 - 2q^2)
    RealSqrt2 w = mul(re_, re_);
    RealSqrt2 v2 = mul(im_, im_);
    w.p += v2.p; w.q += v2.q;
    mpq_class norm = w.p * w.p - 2 * w.q * w.q;
    RealSqrt2 winv{w.p / norm, -w.q / norm};
    ExactScalar r;
    r.re_ = mul(re_, winv);
    RealSqrt2 t = mul(im_, winv);
    r.im_ = {-t.p, -t.q};
    return r;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    auto inv = o.try_inverse();
    if (!inv) throw std::domain_error("division by zero in Q(i,sqrt2)");
    return *this *= *inv;
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const mpq_class& v, const char* unit) {
        if (sgn(v) == 0) return;
        if (!first && sgn(v) > 0) os << "+";
        os << v.get_str() << unit;
        first = false;
    };
    term(a(), "");
    term(b(), "*i");
    term(c(), "*r2");
    term(d(), "*i*r2");
    if (first) os << "0";
    return os.str();
}

ExactScalar root_of_unity_8(long k) {
    long m = ((k % 8) + 8) % 8;
    const mpq_class h(1, 2);
    // zeta^m = exp(-i m pi/4)
    switch (m) {
        case 0: return {1, 0, 0, 0};
        case 1: return {0, 0, h, -h};
        case 2: return {0, -1, 0, 0};
        case 3: return {0, 0, -h, -h};
        case 4: return {-1, 0, 0, 0};
        case 5: return {0, 0, -h, h};
        case 6: return {0, 1, 0, 0};
        default: return {0, 0, h, h};
    }
}

FloatScalar ScalarTraits<FloatScalar>::root8(long k) {
    return std::polar(1.0, -M_PI * static_cast<double>(((k % 8) + 8) % 8) / 4.0);
}

mpq_class parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t += ch;
    if (t.empty()) throw std::invalid_argument("empty rational");
    for (char ch : t)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("malformed rational '" + text + "'");
    if (t[0] == '+') t = t.substr(1);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
    if (t.find('/') != std::string::npos && sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace cliff
