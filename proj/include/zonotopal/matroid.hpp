#ifndef ZONOTOPAL_MATROID_HPP
#define ZONOTOPAL_MATROID_HPP

#include "zonotopal/basis_id.hpp"
#include "zonotopal/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zonotopal {

/// Ordered list X = (x_1, ..., x_N) of vectors in Q^r; the realization of an ordered matroid.
/// The order is part of the identity of the list.
class VectorList {
public:
    VectorList(std::size_t dim, std::vector<Vector> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const Vector& operator[](std::size_t i) const { return vectors_.at(i); }
    const std::vector<Vector>& vectors() const { return vectors_; }

    std::vector<Vector> select(const IndexSet& s) const;
    /// The selected vectors as the columns of an r x |s| matrix.
    Matrix columns(const IndexSet& s) const;
    IndexSet all_indices() const;

    friend bool operator==(const VectorList&, const VectorList&) = default;

private:
    std::size_t dim_;
    std::vector<Vector> vectors_;
};

std::size_t rank_of(const VectorList& X, const IndexSet& s);
IndexSet closure(const VectorList& X, const IndexSet& s);
bool is_spanning(const VectorList& X);
bool is_loop(const VectorList& X, std::size_t i);
/// x_i is in every basis of X.
bool is_coloop(const VectorList& X, std::size_t i);

/// Throws ContractViolation unless b is a strictly increasing r-tuple of
/// independent positions of X.
void validate_basis(const VectorList& X, const BasisId& b);
Rational basis_determinant(const VectorList& X, const BasisId& b);

/// All bases in lexicographic order. Throws ContractViolation if X does not span Q^r.
std::vector<BasisId> bases(const VectorList& X);

struct Flat {
    IndexSet elements;
    std::size_t rank = 0;
    bool corank_one = false;

    friend bool operator==(const Flat&, const Flat&) = default;
};

/// All flats, ordered by rank then lexicographically.
std::vector<Flat> flats(const VectorList& X);

/// Inclusion-minimal sets meeting every basis of `bprime`, in lexicographic order.
std::vector<IndexSet> cocircuits(const VectorList& X, const std::vector<BasisId>& bprime);

struct Activities {
    IndexSet internal;  // I(B)
    IndexSet external;  // E(B)
};

/// Internal and external activity with respect to the max convention.
Activities activity_sets(const VectorList& X, const BasisId& b);

/// sum over bases of x^|I(B)| y^|E(B)|.
class TuttePolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;

    void add(unsigned i, unsigned j, long long c = 1);
    long long coefficient(unsigned i, unsigned j) const;
    const std::map<Key, long long>& coefficients() const { return coefficients_; }
    Rational evaluate(const Rational& x, const Rational& y) const;

    friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;

private:
    std::map<Key, long long> coefficients_;
};

/// e.g. "x^2 + x + y"; x-degree descending, then y-degree ascending.
std::string to_string(const TuttePolynomial& t);

TuttePolynomial tutte(const VectorList& X);
/// Sum over `bprime` only; activities are taken in the full matroid of X.
TuttePolynomial tutte_restricted(const VectorList& X, const std::vector<BasisId>& bprime);

/// sum over bases of |det B|.
Rational zonotope_volume(const VectorList& X);

/// X \ x_i.
VectorList deletion(const VectorList& X, std::size_t i);

/// Image of X \ x_i in Q^{r-1}: coordinates in the basis (x_i, e_j1, ..., e_j(r-1))
/// with the unit vectors picked greedily by lowest index, first coordinate dropped.
VectorList contraction(const VectorList& X, std::size_t i);

/// Positions of X \ x_i, renumbered.
BasisId shift_after_removal(const BasisId& b, std::size_t removed);

}  // namespace zonotopal

#endif
