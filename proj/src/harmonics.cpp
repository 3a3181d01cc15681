#include "cliffordlab/harmonics.hpp"
#include "cliffordlab/check_util.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace cliff {

namespace {

using namespace check_util;

const std::vector<std::pair<Family, std::string>>& family_tags() {
    static const std::vector<std::pair<Family, std::string>> tags{
        {Family::d, "d"},      {Family::delta, "delta"},         {Family::delta_bar, "delta-bar"},
        {Family::eps, "eps"},  {Family::delbar_hat, "delbh"},    {Family::eps_delbh, "eps-delbh"},
        {Family::D, "D"},      {Family::B, "B"},                 {Family::B_Bt, "B-Bt"}};
    return tags;
}

// Every bidegree of the grading, including those with zero dimension.
std::vector<Bidegree> all_bidegrees(Grading g, int n) {
    std::vector<Bidegree> out;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            out.push_back(g == Grading::pq ? Bidegree{p, q} : Bidegree{q - p, n - p - q});
    std::sort(out.begin(), out.end());
    return out;
}

// Harmonic spaces are computed once per family and grading and shared by the checks.
template <class S>
struct SpaceCache {
    explicit SpaceCache(const DiracOperators<S>& o) : ops(&o) {}
    const DiracOperators<S>* ops;
    std::mutex mu;
    std::map<std::pair<Family, Grading>, std::shared_ptr<const HarmonicSpace<S>>> spaces;
    std::once_flag g_once;
    std::pair<Matrix<S>, Matrix<S>> g;

    const HarmonicSpace<S>& get(Family f, Grading gr) {
        std::shared_ptr<const HarmonicSpace<S>> h;
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = spaces.find({f, gr});
            if (it != spaces.end()) return *it->second;
        }
        h = std::make_shared<const HarmonicSpace<S>>(harmonic_space(*ops, f, gr));
        std::lock_guard<std::mutex> lock(mu);
        return *spaces.emplace(std::make_pair(f, gr), h).first->second;
    }

    const std::pair<Matrix<S>, Matrix<S>>& hodge() {
        std::call_once(g_once, [this] { g = hodge_automorphism(ops->sl2(), ops->forms->tol); });
        return g;
    }
};

template <class S>
Matrix<S> part_or_empty(const HarmonicSpace<S>& h, const Bidegree& b, std::size_t rows) {
    auto it = h.parts.find(b);
    return it == h.parts.end() ? Matrix<S>(rows, 0) : it->second;
}

// g^{-1} carries the Clifford (q-p, n-p-q) part of `cl` onto the (p,q) part of `pq`.
template <class S>
CheckResult transport(const HarmonicSpace<S>& cl, const HarmonicSpace<S>& pq, const Matrix<S>& ginv, int n,
                      double tol) {
    const std::size_t N = ginv.rows();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            Matrix<S> src = part_or_empty(cl, {q - p, n - p - q}, N);
            Matrix<S> dst = part_or_empty(pq, {p, q}, N);
            Matrix<S> img = src.cols() ? Matrix<S>(ginv * src) : src;
            if (!same_span(img, dst, tol)) {
                std::ostringstream os;
                os << "(p,q)=(" << p << "," << q << ") dims " << src.cols() << " vs " << dst.cols();
                return expect_true("", "", false, os.str());
            }
        }
    return expect_true("", "", true);
}

template <class S>
CheckResult sl2_closure(const HarmonicSpace<S>& h, const Sl2Operators<S>& s, double tol) {
    if (h.dim() == 0) return expect_true("", "", true);
    bool ok = in_span(h.basis, Matrix<S>(s.Lc * h.basis), tol) && in_span(h.basis, Matrix<S>(s.Lc_bar * h.basis), tol) &&
              in_span(h.basis, Matrix<S>(s.Hc * h.basis), tol);
    return expect_true("", "", ok, ok ? "" : "not preserved by sl(2)");
}

template <class S>
CheckResult kernel_of_laplacian(const DiracOperators<S>& o, const HarmonicSpace<S>& h, double tol) {
    auto ts = family_operators(o, h.family);
    Matrix<S> L(o.dim(), o.dim());
    for (const auto& T : ts) L += laplacian(T);
    Matrix<S> K = nullspace(L, tol);
    bool ok = same_span(K, h.basis, tol);
    std::ostringstream os;
    if (!ok) os << "dim ker Δ = " << K.cols() << ", common kernel " << h.dim();
    return expect_true("", "", ok, os.str());
}

}  // namespace

std::optional<Family> parse_family(const std::string& tag) {
    for (const auto& [f, s] : family_tags())
        if (s == tag) return f;
    return std::nullopt;
}

std::string family_tag(Family f) {
    for (const auto& [g, s] : family_tags())
        if (g == f) return s;
    return "?";
}

std::optional<Grading> parse_grading(const std::string& tag) {
    if (tag == "pq") return Grading::pq;
    if (tag == "rs") return Grading::rs;
    return std::nullopt;
}

std::string grading_tag(Grading g) { return g == Grading::pq ? "pq" : "rs"; }

template <class S>
std::vector<Matrix<S>> family_operators(const DiracOperators<S>& o, Family fam) {
    const auto& f = *o.forms;
    switch (fam) {
        case Family::d: return {f.d};
        case Family::delta: return {f.delta};
        case Family::delta_bar: return {f.delta_bar};
        case Family::eps: return {f.eps};
        case Family::delbar_hat: return {f.delbar_hat};
        case Family::eps_delbh: return {f.eps, f.delbar_hat};
        case Family::D: return {o.curly_D};
        case Family::B: return {o.curly_B};
        case Family::B_Bt: return {o.curly_B, o.t(o.curly_B)};
    }
    return {};
}

template <class S>
std::map<Bidegree, Matrix<S>> grading_projectors(const DiracOperators<S>& o, Grading g) {
    return g == Grading::pq ? o.forms->pi : o.clifford_pi;
}

template <class S>
HarmonicSpace<S> harmonic_space(const DiracOperators<S>& o, Family f, Grading g) {
    const double tol = o.forms->tol;
    HarmonicSpace<S> h{f, g, {}, {}};
    auto ts = family_operators(o, f);
    Matrix<S> stack(0, o.dim());
    for (const auto& T : ts) stack = vstack(vstack(stack, T), T.adjoint());
    h.basis = nullspace(stack, tol);
    if (h.dim() == 0) return h;
    for (const auto& [b, P] : grading_projectors(o, g)) {
        // kernel of the family restricted to the bidegree block
        Matrix<S> block = column_basis(P, tol);
        Matrix<S> coeff = nullspace(Matrix<S>(stack * block), tol);
        if (coeff.cols() == 0) continue;
        h.parts.emplace(b, column_basis(Matrix<S>(block * coeff), tol));
    }
    return h;
}

std::vector<std::vector<std::size_t>> Diamond::rows() const {
    auto at = [this](const Bidegree& b) {
        auto it = dims.find(b);
        return it == dims.end() ? std::size_t(0) : it->second;
    };
    std::vector<std::vector<std::size_t>> out;
    if (grading == Grading::pq) {
        for (int k = 0; k <= 2 * n; ++k) {
            std::vector<std::size_t> row;
            for (int p = std::min(k, n); p >= std::max(0, k - n); --p) row.push_back(at({p, k - p}));
            out.push_back(std::move(row));
        }
    } else {
        for (int s = n; s >= -n; --s) {
            std::vector<std::size_t> row;
            const int w = n - std::abs(s);
            for (int r = -w; r <= w; r += 2) row.push_back(at({r, s}));
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::string Diamond::ascii() const {
    auto rs = rows();
    std::size_t w = 1;
    for (const auto& row : rs)
        for (auto d : row) w = std::max(w, std::to_string(d).size());
    // entry with horizontal index r in -n..n sits at column (r + n) (w + 1)
    std::ostringstream os;
    for (const auto& row : rs) {
        const int len = int(row.size());
        std::string line(std::size_t(2 * n + 1) * (w + 1), ' ');
        for (int j = 0; j < len; ++j) {
            const int r = -(len - 1) + 2 * j;
            std::string cell = std::to_string(row[j]);
            cell = std::string(w - cell.size(), ' ') + cell;
            line.replace(std::size_t(r + n) * (w + 1), w, cell);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    }
    return os.str();
}

template <class S>
Diamond make_diamond(const DiracOperators<S>& o, const HarmonicSpace<S>& h) {
    Diamond d;
    d.model = o.forms->model.name();
    d.family = family_tag(h.family);
    d.grading = h.grading;
    d.n = o.m() / 2;
    for (const auto& b : all_bidegrees(h.grading, d.n)) d.dims[b] = h.dim(b);
    return d;
}

template <class S>
std::vector<Check> harmonic_checks(const DiracOperators<S>& ops) {
    const auto* o = &ops;
    const double tol = ops.forms->tol;
    const int n = ops.m() / 2;
    auto cache = std::make_shared<SpaceCache<S>>(ops);
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    for (const auto& [fam, tg] : family_tags()) {
        add("harm.kernel[" + tg + "]", "ker ΣΔ_T = ∩ ker T ∩ ker T* [" + tg + "]", [o, cache, fam, tol] {
            return kernel_of_laplacian(*o, cache->get(fam, Grading::pq), tol);
        });
    }
    // families built from operators of pure bidegree have graded harmonic spaces
    for (auto [fam, gr] : {std::pair{Family::eps_delbh, Grading::pq}, std::pair{Family::B_Bt, Grading::pq},
                           std::pair{Family::B_Bt, Grading::rs}}) {
        const std::string tg = family_tag(fam) + "," + grading_tag(gr);
        add("harm.graded[" + tg + "]", "𝓗 = ⊕ 𝓗^{i,j} [" + tg + "]", [cache, fam, gr] {
            const auto& h = cache->get(fam, gr);
            std::size_t sum = 0;
            for (const auto& [b, P] : h.parts) sum += P.cols();
            return expect_true("", "", sum == h.dim(),
                               "parts sum to " + std::to_string(sum) + " of " + std::to_string(h.dim()));
        });
    }
    add("harm.sl2_closure[B-Bt]", "𝓛, 𝓛̄, 𝓗 preserve 𝓗_𝔅 ∩ 𝓗_𝔅ᵗ", [o, cache, tol] {
        return sl2_closure(cache->get(Family::B_Bt, Grading::rs), o->sl2(), tol);
    });
    add("harm.c_iso[B-Bt]", "c: 𝓗^{r,s} ≅ 𝓗^{−r,−s}", [o, cache, n, tol] {
        const auto& h = cache->get(Family::B_Bt, Grading::rs);
        for (const auto& b : all_bidegrees(Grading::rs, n)) {
            Matrix<S> src = part_or_empty(h, b, o->dim()), dst = part_or_empty(h, {-b.first, -b.second}, o->dim());
            if (src.cols() != dst.cols() || !in_span(dst, src.conj(), tol))
                return expect_true("", "", false,
                                   "(r,s)=(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")");
        }
        return expect_true("", "", true);
    });
    add("harm.t_iso[B-Bt]", "ᵗ: 𝓗^{r,s} ≅ 𝓗^{r,−s}", [o, cache, n, tol] {
        const auto& h = cache->get(Family::B_Bt, Grading::rs);
        const auto& trs = o->sl2().trs;
        for (const auto& b : all_bidegrees(Grading::rs, n)) {
            Matrix<S> src = part_or_empty(h, b, o->dim()), dst = part_or_empty(h, {b.first, -b.second}, o->dim());
            Matrix<S> img = src.cols() ? Matrix<S>(trs * src) : src;
            if (src.cols() != dst.cols() || !in_span(dst, img, tol))
                return expect_true("", "", false,
                                   "(r,s)=(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")");
        }
        return expect_true("", "", true);
    });
    add("harm.g_preserves[B-Bt]", "g(𝓗_𝔅 ∩ 𝓗_𝔅ᵗ) = 𝓗_𝔅 ∩ 𝓗_𝔅ᵗ", [cache, tol] {
        const auto& h = cache->get(Family::B_Bt, Grading::pq);
        return expect_true("", "", h.dim() == 0 || in_span(h.basis, Matrix<S>(cache->hodge().first * h.basis), tol));
    });
    add("harm.g_transport", "g⁻¹(𝓗_𝔅∩𝓗_𝔅ᵗ)^{q−p,n−p−q} = (𝓗_ε∩𝓗_∂̄̂)^{p,q}", [cache, n, tol] {
        return transport(cache->get(Family::B_Bt, Grading::rs), cache->get(Family::eps_delbh, Grading::pq),
                         cache->hodge().second, n, tol);
    });
    return c;
}

template <class S>
std::vector<Check> almost_kaehler_harmonic_checks(const DiracOperators<S>& ops) {
    const auto* o = &ops;
    const auto* f = ops.forms;
    const double tol = f->tol;
    const int n = ops.m() / 2;
    auto cache = std::make_shared<SpaceCache<S>>(ops);
    std::vector<Check> c;
    auto add = [&](std::string id, std::string anchor, std::function<CheckResult()> fn) {
        c.push_back({std::move(id), std::move(anchor), std::move(fn)});
    };

    add("akh.eps_del", "ε = ∂, ∂̄̂ = ∂̄", [f, tol] { return all_of({eq(f->eps, f->del, tol), eq(f->delbar_hat, f->delbar, tol)}); });
    add("akh.sl2_closure[D]", "𝓛, 𝓛̄, 𝓗 preserve 𝓗_𝔇", [o, cache, tol] {
        return sl2_closure(cache->get(Family::D, Grading::rs), o->sl2(), tol);
    });
    add("akh.D_delta", "𝓗_𝔇 = 𝓗_δ", [cache, tol] {
        const auto& hd = cache->get(Family::D, Grading::pq);
        const auto& hl = cache->get(Family::delta, Grading::pq);
        bool ok = same_span(hd.basis, hl.basis, tol);
        return expect_true("", "", ok, ok ? "" : "dims " + std::to_string(hd.dim()) + " vs " + std::to_string(hl.dim()));
    });
    add("akh.g_preserves[D]", "g𝓗_𝔇 = 𝓗_𝔇", [cache, tol] {
        const auto& h = cache->get(Family::D, Grading::pq);
        return expect_true("", "", h.dim() == 0 || in_span(h.basis, Matrix<S>(cache->hodge().first * h.basis), tol));
    });
    add("akh.g_transport", "g⁻¹𝓗_𝔇^{q−p,n−p−q} = 𝓗_δ^{p,q}", [cache, n, tol] {
        return transport(cache->get(Family::D, Grading::rs), cache->get(Family::delta, Grading::pq),
                         cache->hodge().second, n, tol);
    });
    return c;
}

#define CLIFF_INSTANTIATE(S)                                                                       \
    template std::vector<Matrix<S>> family_operators(const DiracOperators<S>&, Family);            \
    template std::map<Bidegree, Matrix<S>> grading_projectors(const DiracOperators<S>&, Grading);  \
    template HarmonicSpace<S> harmonic_space(const DiracOperators<S>&, Family, Grading);           \
    template Diamond make_diamond(const DiracOperators<S>&, const HarmonicSpace<S>&);              \
    template std::vector<Check> harmonic_checks(const DiracOperators<S>&);                         \
    template std::vector<Check> almost_kaehler_harmonic_checks(const DiracOperators<S>&);
CLIFF_INSTANTIATE(ExactScalar)
CLIFF_INSTANTIATE(FloatScalar)
#undef CLIFF_INSTANTIATE

}  // namespace cliff
