#include "cliffordlab/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace cliff {

namespace {

bool zero_value(const ExactScalar& x) { return x.is_zero(); }
bool zero_value(const FloatScalar& x) { return x == FloatScalar(0.0, 0.0); }

template <class S>
void check_same(const Multivector<S>& x, const Multivector<S>& y) {
    if (!(x.context() == y.context())) throw std::invalid_argument("multivectors from different algebra contexts");
}

template <class S>
std::vector<S> dense_vector_coeffs(const Multivector<S>& v) {
    if (!v.is_vector() && !v.is_zero()) throw std::invalid_argument("contractor must have pure degree 1");
    std::vector<S> c(v.context().dim(), S(0));
    for (const auto& [b, s] : v.terms()) c[std::countr_zero(b)] = s;
    return c;
}

// Generic bilinear blade product into a matrix: column b gets sum_a x_a sign(a,b) at a^b.
template <class S, class Sign>
Matrix<S> product_matrix(const Multivector<S>& x, Sign sign, bool left) {
    std::size_t N = x.context().algebra_dim();
    Matrix<S> m(N, N);
    for (Blade b = 0; b < N; ++b)
        for (const auto& [a, s] : x.terms()) {
            int sg = left ? sign(a, b) : sign(b, a);
            if (sg == 0) continue;
            if (sg > 0) m(a ^ b, b) += s; else m(a ^ b, b) -= s;
        }
    return m;
}

}  // namespace

int reorder_sign(Blade a, Blade b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return swaps % 2 ? -1 : 1;
}

int contract_sign(int k, Blade b) {
    Blade bit = Blade(1) << k;
    if (!(b & bit)) return 0;
    return std::popcount(b & (bit - 1)) % 2 ? -1 : 1;
}

AlgebraContext AlgebraContext::standard(int n) {
    RationalMatrix J(2 * n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (int j = 0; j < n; ++j) {
        J[n + j][j] = 1;
        J[j][n + j] = -1;
    }
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j) labels.push_back("e" + std::to_string(j + 1));
    for (int j = 0; j < n; ++j) labels.push_back("Je" + std::to_string(j + 1));
    return AlgebraContext(n, J, labels);
}

AlgebraContext::AlgebraContext(int n, RationalMatrix J, std::vector<std::string> labels)
    : n_(n), J_(std::move(J)), labels_(std::move(labels)) {
    if (n < 1 || n > 8) throw std::invalid_argument("complex dimension out of range");
    const int m = 2 * n;
    if (int(J_.size()) != m) throw std::invalid_argument("J has wrong size");
    for (const auto& row : J_)
        if (int(row.size()) != m) throw std::invalid_argument("J has wrong size");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            mpq_class jj = 0, jtj = 0;
            for (int k = 0; k < m; ++k) {
                jj += J_[i][k] * J_[k][j];
                jtj += J_[k][i] * J_[k][j];
            }
            if (jj != (i == j ? -1 : 0)) throw std::invalid_argument("J does not square to -1");
            if (jtj != (i == j ? 1 : 0)) throw std::invalid_argument("J is not orthogonal");
        }
    if (labels_.empty())
        for (int k = 0; k < m; ++k) labels_.push_back("v" + std::to_string(k + 1));
    if (int(labels_.size()) != m) throw std::invalid_argument("wrong number of basis labels");
}

template <class S>
Multivector<S> Multivector<S>::scalar(const AlgebraContext& ctx, const S& s) {
    return blade(ctx, 0, s);
}

template <class S>
Multivector<S> Multivector<S>::blade(const AlgebraContext& ctx, Blade b, const S& s) {
    Multivector m(ctx);
    m.add_term(b, s);
    return m;
}

template <class S>
Multivector<S> Multivector<S>::vector(const AlgebraContext& ctx, int k) {
    return blade(ctx, Blade(1) << k);
}

template <class S>
Multivector<S> Multivector<S>::vector(const AlgebraContext& ctx, const std::vector<S>& coeffs) {
    Multivector m(ctx);
    for (int k = 0; k < ctx.dim(); ++k) m.add_term(Blade(1) << k, coeffs[k]);
    return m;
}

template <class S>
Multivector<S> Multivector<S>::from_dense(const AlgebraContext& ctx, const std::vector<S>& v, double tol) {
    Multivector m(ctx);
    for (Blade b = 0; b < v.size(); ++b)
        if (!Traits::is_zero(v[b], tol)) m.terms_[b] = v[b];
    return m;
}

template <class S>
S Multivector<S>::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
}

template <class S>
void Multivector<S>::add_term(Blade b, const S& s) {
    if (zero_value(s)) return;
    auto [it, inserted] = terms_.try_emplace(b, s);
    if (!inserted) {
        it->second += s;
        if (zero_value(it->second)) terms_.erase(it);
    }
}

template <class S>
std::vector<S> Multivector<S>::dense() const {
    std::vector<S> v(ctx_->algebra_dim(), S(0));
    for (const auto& [b, s] : terms_) v[b] = s;
    return v;
}

template <class S>
Multivector<S> Multivector<S>::grade_part(int p) const {
    Multivector m(*ctx_);
    for (const auto& [b, s] : terms_)
        if (grade(b) == p) m.terms_[b] = s;
    return m;
}

template <class S>
bool Multivector<S>::is_vector() const {
    if (terms_.empty()) return false;
    for (const auto& [b, s] : terms_)
        if (grade(b) != 1) return false;
    return true;
}

template <class S>
Multivector<S>& Multivector<S>::operator+=(const Multivector& o) {
    check_same(*this, o);
    for (const auto& [b, s] : o.terms_) add_term(b, s);
    return *this;
}

template <class S>
Multivector<S>& Multivector<S>::operator-=(const Multivector& o) {
    check_same(*this, o);
    for (const auto& [b, s] : o.terms_) add_term(b, -s);
    return *this;
}

template <class S>
Multivector<S>& Multivector<S>::operator*=(const S& s) {
    if (zero_value(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, x] : terms_) x *= s;
    return *this;
}

template <class S>
std::string Multivector<S>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s << ")";
        if (b == 0) continue;
        os << "*";
        bool f2 = true;
        for (int k = 0; k < ctx_->dim(); ++k)
            if (b >> k & 1) {
                os << (f2 ? "" : "^") << ctx_->label(k);
                f2 = false;
            }
    }
    return os.str();
}

template <class S>
Multivector<S> clifford_mul(const Multivector<S>& x, const Multivector<S>& y) {
    check_same(x, y);
    Multivector<S> r(x.context());
    for (const auto& [a, s] : x.terms())
        for (const auto& [b, t] : y.terms()) r.add_term(a ^ b, S(clifford_sign(a, b)) * s * t);
    return r;
}

template <class S>
Multivector<S> wedge(const Multivector<S>& x, const Multivector<S>& y) {
    check_same(x, y);
    Multivector<S> r(x.context());
    for (const auto& [a, s] : x.terms())
        for (const auto& [b, t] : y.terms()) {
            int sg = wedge_sign(a, b);
            if (sg) r.add_term(a | b, S(sg) * s * t);
        }
    return r;
}

template <class S>
Multivector<S> contract(const Multivector<S>& v, const Multivector<S>& x) {
    check_same(v, x);
    auto c = dense_vector_coeffs(v);
    Multivector<S> r(x.context());
    for (int k = 0; k < x.context().dim(); ++k) {
        if (zero_value(c[k])) continue;
        for (const auto& [b, s] : x.terms()) {
            int sg = contract_sign(k, b);
            if (sg) r.add_term(b ^ (Blade(1) << k), S(sg) * c[k] * s);
        }
    }
    return r;
}

template <class S>
Multivector<S> antipodal(const Multivector<S>& x) {
    Multivector<S> r(x.context());
    for (const auto& [b, s] : x.terms()) r.add_term(b, grade(b) % 2 ? -s : s);
    return r;
}

template <class S>
Multivector<S> transpose(const Multivector<S>& x) {
    Multivector<S> r(x.context());
    for (const auto& [b, s] : x.terms()) {
        int p = grade(b);
        r.add_term(b, (p * (p - 1) / 2) % 2 ? -s : s);
    }
    return r;
}

template <class S>
Multivector<S> volume(const AlgebraContext& ctx) {
    return Multivector<S>::blade(ctx, Blade(ctx.algebra_dim() - 1));
}

template <class S>
Multivector<S> hodge_star(const Multivector<S>& x) {
    return clifford_mul(transpose(antipodal(x)), volume<S>(x.context()));
}

template <class S>
Multivector<S> conjugate_c(const Multivector<S>& x) {
    Multivector<S> r(x.context());
    for (const auto& [b, s] : x.terms()) r.add_term(b, ScalarTraits<S>::conj(s));
    return r;
}

template <class S>
Multivector<S> apply_J(const Multivector<S>& v) {
    auto c = dense_vector_coeffs(v);
    const auto& J = v.context().J();
    int m = v.context().dim();
    std::vector<S> out(m, S(0));
    for (int j = 0; j < m; ++j) {
        if (zero_value(c[j])) continue;
        for (int k = 0; k < m; ++k)
            if (sgn(J[k][j]) != 0) out[k] += ScalarTraits<S>::from_rational(J[k][j]) * c[j];
    }
    return Multivector<S>::vector(v.context(), out);
}

template <class S>
Multivector<S> epsilon(const Multivector<S>& v) {
    const S half = ScalarTraits<S>::from_rational(mpq_class(1, 2));
    return (v - apply_J(v) * ScalarTraits<S>::i()) * half;
}

template <class S>
Multivector<S> epsilon_bar(const Multivector<S>& v) {
    const S half = ScalarTraits<S>::from_rational(mpq_class(1, 2));
    return (v + apply_J(v) * ScalarTraits<S>::i()) * half;
}

template <class S>
Matrix<S> left_mul_matrix(const Multivector<S>& x) {
    return product_matrix(x, clifford_sign, true);
}

template <class S>
Matrix<S> right_mul_matrix(const Multivector<S>& x) {
    return product_matrix(x, clifford_sign, false);
}

template <class S>
Matrix<S> wedge_matrix(const Multivector<S>& x) {
    return product_matrix(x, wedge_sign, true);
}

template <class S>
Matrix<S> interior_matrix(const Multivector<S>& v) {
    auto c = dense_vector_coeffs(v);
    std::size_t N = v.context().algebra_dim();
    Matrix<S> m(N, N);
    for (int k = 0; k < v.context().dim(); ++k) {
        if (zero_value(c[k])) continue;
        for (Blade b = 0; b < N; ++b) {
            int sg = contract_sign(k, b);
            if (sg > 0) m(b ^ (Blade(1) << k), b) += c[k];
            else if (sg < 0) m(b ^ (Blade(1) << k), b) -= c[k];
        }
    }
    return m;
}

template <class S>
Matrix<S> alpha_matrix(const AlgebraContext& ctx) {
    std::size_t N = ctx.algebra_dim();
    Matrix<S> m(N, N);
    for (Blade b = 0; b < N; ++b) m(b, b) = S(grade(b) % 2 ? -1 : 1);
    return m;
}

template <class S>
Matrix<S> transpose_matrix(const AlgebraContext& ctx) {
    std::size_t N = ctx.algebra_dim();
    Matrix<S> m(N, N);
    for (Blade b = 0; b < N; ++b) {
        int p = grade(b);
        m(b, b) = S((p * (p - 1) / 2) % 2 ? -1 : 1);
    }
    return m;
}

template <class S>
Matrix<S> hodge_star_matrix(const AlgebraContext& ctx) {
    return right_mul_matrix(volume<S>(ctx)) * transpose_matrix<S>(ctx) * alpha_matrix<S>(ctx);
}

template <class S>
Matrix<S> degree_projector(const AlgebraContext& ctx, int p) {
    std::size_t N = ctx.algebra_dim();
    Matrix<S> m(N, N);
    for (Blade b = 0; b < N; ++b)
        if (grade(b) == p) m(b, b) = S(1);
    return m;
}

template <class S>
Matrix<S> J_alg_matrix(const AlgebraContext& ctx) {
    std::size_t N = ctx.algebra_dim();
    int m = ctx.dim();
    std::vector<Multivector<S>> images;
    for (int k = 0; k < m; ++k) images.push_back(apply_J(Multivector<S>::vector(ctx, k)));
    Matrix<S> out(N, N);
    for (Blade b = 0; b < N; ++b) {
        auto img = Multivector<S>::scalar(ctx, S(1));
        for (int k = 0; k < m; ++k)
            if (b >> k & 1) img = wedge(img, images[k]);
        for (const auto& [c, s] : img.terms()) out(c, b) = s;
    }
    return out;
}

template <class S>
Matrix<S> derivation_matrix(const AlgebraContext& ctx, const Matrix<S>& A) {
    std::size_t N = ctx.algebra_dim();
    int m = ctx.dim();
    Matrix<S> out(N, N);
    // sum_{k,j} A[k][j] E_k I_j acting blade by blade
    for (Blade b = 0; b < N; ++b)
        for (int j = 0; j < m; ++j) {
            int sj = contract_sign(j, b);
            if (!sj) continue;
            Blade rest = b ^ (Blade(1) << j);
            for (int k = 0; k < m; ++k) {
                if (zero_value(A(k, j))) continue;
                int sk = wedge_sign(Blade(1) << k, rest);
                if (!sk) continue;
                if (sj * sk > 0) out(rest | (Blade(1) << k), b) += A(k, j);
                else out(rest | (Blade(1) << k), b) -= A(k, j);
            }
        }
    return out;
}

template <class S>
Matrix<S> rational_to_matrix(const RationalMatrix& r) {
    Matrix<S> m(r.size(), r.empty() ? 0 : r[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(r[i][j]) != 0) m(i, j) = ScalarTraits<S>::from_rational(r[i][j]);
    return m;
}

template <class S>
Matrix<S> J_der_matrix(const AlgebraContext& ctx) {
    return derivation_matrix(ctx, rational_to_matrix<S>(ctx.J()));
}

#define CLIFF_INSTANTIATE(S)                                                          \
    template class Multivector<S>;                                                    \
    template Multivector<S> clifford_mul(const Multivector<S>&, const Multivector<S>&); \
    template Multivector<S> wedge(const Multivector<S>&, const Multivector<S>&);      \
    template Multivector<S> contract(const Multivector<S>&, const Multivector<S>&);   \
    template Multivector<S> antipodal(const Multivector<S>&);                         \
    template Multivector<S> transpose(const Multivector<S>&);                         \
    template Multivector<S> hodge_star(const Multivector<S>&);                        \
    template Multivector<S> conjugate_c(const Multivector<S>&);                       \
    template Multivector<S> volume(const AlgebraContext&);                            \
    template Multivector<S> apply_J(const Multivector<S>&);                           \
    template Multivector<S> epsilon(const Multivector<S>&);                           \
    template Multivector<S> epsilon_bar(const Multivector<S>&);                       \
    template Matrix<S> left_mul_matrix(const Multivector<S>&);                        \
    template Matrix<S> right_mul_matrix(const Multivector<S>&);                       \
    template Matrix<S> wedge_matrix(const Multivector<S>&);                           \
    template Matrix<S> interior_matrix(const Multivector<S>&);                        \
    template Matrix<S> alpha_matrix<S>(const AlgebraContext&);                        \
    template Matrix<S> transpose_matrix<S>(const AlgebraContext&);                    \
    template Matrix<S> hodge_star_matrix<S>(const AlgebraContext&);                   \
    template Matrix<S> degree_projector<S>(const AlgebraContext&, int);               \
    template Matrix<S> J_alg_matrix<S>(const AlgebraContext&);                        \
    template Matrix<S> J_der_matrix<S>(const AlgebraContext&);                        \
    template Matrix<S> derivation_matrix(const AlgebraContext&, const Matrix<S>&);    \
    template Matrix<S> rational_to_matrix<S>(const RationalMatrix&);

CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
