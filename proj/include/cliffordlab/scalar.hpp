#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace cliff {

// p + q*sqrt(2) with rational p, q.
struct RealSqrt2 {
    mpq_class p, q;

    RealSqrt2() = default;
    RealSqrt2(mpq_class p_, mpq_class q_) : p(std::move(p_)), q(std::move(q_)) {}

    bool is_zero() const { return sgn(p) == 0 && sgn(q) == 0; }
    bool operator==(const RealSqrt2& o) const { return p == o.p && q == o.q; }
    double to_double() const;
};

// Element a + b*i + c*sqrt(2) + d*i*sqrt(2) of Q(i, sqrt 2), stored as re + i*im
// with re = a + c*sqrt(2) and im = b + d*sqrt(2).
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : re_(mpq_class(v), mpq_class(0)) {}
    ExactScalar(const mpq_class& v) : re_(v, mpq_class(0)) { re_.p.canonicalize(); }
    ExactScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
        : re_(std::move(a), std::move(c)), im_(std::move(b), std::move(d)) {
        re_.p.canonicalize(); re_.q.canonicalize();
        im_.p.canonicalize(); im_.q.canonicalize();
    }

    static ExactScalar i() { return {0, 1, 0, 0}; }
    static ExactScalar sqrt2() { return {0, 0, 1, 0}; }

    const mpq_class& a() const { return re_.p; }
    const mpq_class& b() const { return im_.p; }
    const mpq_class& c() const { return re_.q; }
    const mpq_class& d() const { return im_.q; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return sgn(re_.q) == 0 && im_.is_zero(); }

    ExactScalar conj() const;
    // Multiplicative inverse; empty for zero.
    std::optional<ExactScalar> try_inverse() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    // Throws std::domain_error on division by zero.
    ExactScalar& operator/=(const ExactScalar& o);

    // this += x * y without temporaries for the common rational case
    void add_product(const ExactScalar& x, const ExactScalar& y);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
    ExactScalar operator-() const;

    bool operator==(const ExactScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

private:
    RealSqrt2 re_, im_;
};

using FloatScalar = std::complex<double>;

// zeta^k with zeta = (sqrt2/2)(1 - i) = exp(-pi i / 4).
ExactScalar root_of_unity_8(long k);

// Uniform access used by the templated layers.
template <class S> struct ScalarTraits;

template <> struct ScalarTraits<ExactScalar> {
    static constexpr bool exact = true;
    static ExactScalar from_rational(const mpq_class& q) { return ExactScalar(q); }
    static ExactScalar i() { return ExactScalar::i(); }
    static ExactScalar root8(long k) { return root_of_unity_8(k); }
    static ExactScalar conj(const ExactScalar& x) { return x.conj(); }
    static bool is_zero(const ExactScalar& x, double) { return x.is_zero(); }
    static double abs(const ExactScalar& x) { return std::abs(x.to_complex()); }
    static FloatScalar to_complex(const ExactScalar& x) { return x.to_complex(); }
    static void add_product(ExactScalar& acc, const ExactScalar& x, const ExactScalar& y) {
        acc.add_product(x, y);
    }
};

template <> struct ScalarTraits<FloatScalar> {
    static constexpr bool exact = false;
    static FloatScalar from_rational(const mpq_class& q) { return {q.get_d(), 0.0}; }
    static FloatScalar i() { return {0.0, 1.0}; }
    static FloatScalar root8(long k);
    static FloatScalar conj(const FloatScalar& x) { return std::conj(x); }
    static bool is_zero(const FloatScalar& x, double tol) { return std::abs(x) <= tol; }
    static double abs(const FloatScalar& x) { return std::abs(x); }
    static FloatScalar to_complex(const FloatScalar& x) { return x; }
    static void add_product(FloatScalar& acc, const FloatScalar& x, const FloatScalar& y) {
        acc += x * y;
    }
};

template <class S> S rat(long p, long q = 1) { return ScalarTraits<S>::from_rational(mpq_class(p, q)); }
template <class S> S rat(const mpq_class& q) { return ScalarTraits<S>::from_rational(q); }

// Parses "p/q", "p", or "-p/q".
mpq_class parse_rational(const std::string& text);

}  // namespace cliff
