#pragma once

#include "cliffordlab/dirac.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cliff {

// Operator families whose joint kernel (with adjoints) defines a harmonic space.
enum class Family { d, delta, delta_bar, eps, delbar_hat, eps_delbh, D, B, B_Bt };
enum class Grading { pq, rs };

// CLI tags: d, delta, delta-bar, eps, delbh, eps-delbh, D, B, B-Bt
std::optional<Family> parse_family(const std::string& tag);
std::string family_tag(Family f);
std::optional<Grading> parse_grading(const std::string& tag);
std::string grading_tag(Grading g);

template <class S>
struct HarmonicSpace {
    Family family;
    Grading grading;
    Matrix<S> basis;                      // the whole harmonic space, as columns
    std::map<Bidegree, Matrix<S>> parts;  // harmonic space intersected with each bidegree

    std::size_t dim() const { return basis.cols(); }
    std::size_t dim(const Bidegree& b) const {
        auto it = parts.find(b);
        return it == parts.end() ? 0 : it->second.cols();
    }
};

// The operators T of a family; the harmonic space is the common kernel of all T and T*.
template <class S> std::vector<Matrix<S>> family_operators(const DiracOperators<S>& ops, Family f);
// Bidegree projectors of a grading: (p,q) on forms or (r,s) on the Clifford side.
template <class S> std::map<Bidegree, Matrix<S>> grading_projectors(const DiracOperators<S>& ops, Grading g);

template <class S> HarmonicSpace<S> harmonic_space(const DiracOperators<S>& ops, Family f, Grading g);

// Integer dimension table of a harmonic space, labelled as invariant forms.
struct Diamond {
    std::string model;
    std::string family;
    Grading grading = Grading::pq;
    int n = 0;
    std::map<Bidegree, std::size_t> dims;

    // Centered rows. pq: row k = p + q, entries by q - p. rs: row s from n down to -n, entries by r.
    std::vector<std::vector<std::size_t>> rows() const;
    std::string ascii() const;
};

template <class S> Diamond make_diamond(const DiracOperators<S>& ops, const HarmonicSpace<S>& h);

// Kernel cross-checks, sl(2) closure and the c / transpose / g isomorphisms.
template <class S> std::vector<Check> harmonic_checks(const DiracOperators<S>& ops);
// Identities requiring d omega = 0.
template <class S> std::vector<Check> almost_kaehler_harmonic_checks(const DiracOperators<S>& ops);

}  // namespace cliff
