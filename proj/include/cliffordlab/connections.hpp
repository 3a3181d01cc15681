#pragma once

#include "cliffordlab/lie_model.hpp"
#include "cliffordlab/report.hpp"

#include <type_traits>
#include <vector>

namespace cliff {

// Real coefficient type paired with a scalar backend.
template <class S> using real_of = std::conditional_t<ScalarTraits<S>::exact, mpq_class, double>;

template <class R> struct RealTraits;
template <> struct RealTraits<mpq_class> {
    static mpq_class from_rational(const mpq_class& q) { return q; }
    static double to_double(const mpq_class& x) { return x.get_d(); }
    static bool is_zero(const mpq_class& x, double) { return x == 0; }
};
template <> struct RealTraits<double> {
    static double from_rational(const mpq_class& q) { return q.get_d(); }
    static double to_double(double x) { return x; }
    static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
};

template <class S> S to_scalar(const real_of<S>& x);

// A 3-tensor on the frame, phi(a,b,c) = <v_a, phi(v_b, v_c)> for a vector
// valued 2-form. Also holds connection coefficients Gamma(i,j,k) = <nabla_i v_j, v_k>.
template <class R>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int m) : m_(m), data_(std::size_t(m) * m * m, R(0)) {}

    int dim() const { return m_; }
    R& operator()(int a, int b, int c) { return data_[(std::size_t(a) * m_ + b) * m_ + c]; }
    const R& operator()(int a, int b, int c) const { return data_[(std::size_t(a) * m_ + b) * m_ + c]; }

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    Tensor3& operator*=(const R& s);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, const R& s) { return a *= s; }
    friend Tensor3 operator*(const R& s, Tensor3 a) { return a *= s; }
    Tensor3 operator-() const { return *this * R(-1); }
    bool operator==(const Tensor3& o) const = default;

    bool is_zero(double tol) const;
    double max_abs() const;
    // phi(X,Y,Z) = -phi(X,Z,Y)
    bool skew_in_last_two(double tol) const;

private:
    int m_ = 0;
    std::vector<R> data_;
};

using Covector = std::vector<mpq_class>;

// The real geometric data of a model in backend R.
template <class R>
struct Geometry {
    explicit Geometry(const LieModel& model);

    const LieModel* model;
    int m;
    std::vector<R> J;  // J[k*m + j] = <v_k, J v_j>
    Tensor3<R> c;      // c(k,i,j) = c^k_{ij}

    R Jkj(int k, int j) const { return J[std::size_t(k) * m + j]; }

    // phi(J^{x}X, J^{y}Y, J^{z}Z) for flags x,y,z in {0,1}
    Tensor3<R> with_J(const Tensor3<R>& phi, bool x, bool y, bool z) const;

    Tensor3<R> P(const Tensor3<R>& phi) const;
    std::vector<R> r(const Tensor3<R>& phi) const;
    Tensor3<R> i(const std::vector<R>& form) const;
    Tensor3<R> Q(const Tensor3<R>& phi) const { return i(r(phi)); }
    Tensor3<R> M(const Tensor3<R>& phi) const { return with_J(phi, false, true, true); }
    Tensor3<R> p20(const Tensor3<R>& phi) const;
    Tensor3<R> p02(const Tensor3<R>& phi) const;
    Tensor3<R> p11(const Tensor3<R>& phi) const;
    // E+/E- parts of a 3-form
    Tensor3<R> plus(const Tensor3<R>& phi) const;
    Tensor3<R> minus(const Tensor3<R>& phi) const;
    // the part of phi^{1,1} in the complement of ker P, via the inverse of P there
    Tensor3<R> p11_a(const Tensor3<R>& phi) const;

    Tensor3<R> bracket_tensor() const;  // <X, [Y,Z]>
    Tensor3<R> nijenhuis() const;       // <X, N(Y,Z)>
    Tensor3<R> d_omega() const;         // from brackets: -w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X)
    Tensor3<R> dc_omega() const;        // -d omega(JX, JY, JZ)

    Tensor3<R> levi_civita() const;
    Tensor3<R> torsion(const Tensor3<R>& gamma) const;
    // (nabla_X J)Y paired with Z
    Tensor3<R> nabla_J(const Tensor3<R>& gamma) const;
    // (nabla_X w)(Y,Z) from -w(nabla_X Y, Z) - w(Y, nabla_X Z)
    Tensor3<R> nabla_omega(const Tensor3<R>& gamma) const;

    // T^t = N + (3t-1)/4 dcw+ - (t+1)/4 M(dcw+)
    Tensor3<R> canonical_torsion(const mpq_class& t) const;
    // A^t = -N + 3/2 PN + (t-1)/4 dcw+ + (t+1)/4 M(dcw+)
    Tensor3<R> canonical_potential(const mpq_class& t) const;
    // Gamma^t = Gamma_LC + A^t
    Tensor3<R> gauduchon(const mpq_class& t) const;

    Tensor3<R> random_tensor(unsigned seed, int lo = -3, int hi = 3) const;
    Tensor3<R> random_skew(unsigned seed) const;  // skew in last two slots
    Tensor3<R> random_three_form(unsigned seed) const;
};

// 3-forms between tensor and multivector storage: coefficient of
// e^a ^ e^b ^ e^c (a<b<c) equals phi(a,b,c).
template <class S> Tensor3<real_of<S>> tensor_from_three_form(const Multivector<S>& phi);
template <class S> Multivector<S> three_form_from_tensor(const AlgebraContext& ctx, const Tensor3<real_of<S>>& t);
// 1-form <-> coefficient list
template <class S> std::vector<real_of<S>> covector_from_form(const Multivector<S>& phi);

// Lee form Lambda(d omega) as frame coefficients.
template <class S> std::vector<real_of<S>> lee_form(const LieModel& model);

// The appendix identity suite for t in `ts`.
template <class S>
std::vector<Check> appendix_checks(const LieModel& model, const std::vector<mpq_class>& ts, double tol);

}  // namespace cliff
