#ifndef ZONOTOPAL_FORWARD_EXCHANGE_HPP
#define ZONOTOPAL_FORWARD_EXCHANGE_HPP

#include "zonotopal/matroid.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zonotopal {

/// Elements of X in S_i \ S_{i-1} for the flag S_i = span(b_1..b_i),
/// split by orientation relative to (b_1, ..., b_i).
struct FlagLevel {
    IndexSet positive;
    IndexSet negative;

    IndexSet elements() const;
};

/// One level per basis element; loops belong to no level.
std::vector<FlagLevel> flag_partition(const VectorList& X, const BasisId& b);

/// Level (0-based) of a nonzero vector in the flag of `b`, and whether it is positive.
struct FlagPosition {
    std::size_t level;
    bool positive;
};
FlagPosition flag_position(const Matrix& basis_inverse, const Vector& u);

struct ExchangeViolation {
    BasisId basis;
    std::size_t level;    // 0-based i
    std::size_t element;  // 0-based position of x
};

struct ForwardExchangeResult {
    bool holds = true;
    std::optional<ExchangeViolation> witness;  // first violation in scan order
};

/// Exhaustive check of: for B in B', x in S_i^B \ (S_{i-1}^B u E(B)) => (B \ b_i) u x in B'.
ForwardExchangeResult is_forward_exchange(const VectorList& X, const std::vector<BasisId>& bprime);

/// Smallest superset of `seed` with the forward exchange property.
std::vector<BasisId> forward_exchange_closure(const VectorList& X, const std::vector<BasisId>& seed);

/// x is placeable in B' if every B in B' has some b with (B \ b) u x in B'.
bool is_placeable(std::size_t x, const std::vector<BasisId>& bprime);

/// Recursive placibility, memoized on the basis subset.
bool is_placible(const VectorList& X, const std::vector<BasisId>& bprime);

enum class FamilyKind { external, internal, semi_external, semi_internal, generalized_external };

FamilyKind parse_family_kind(const std::string& name);
std::string to_string(FamilyKind kind);

/// Arguments of the standard basis families; which fields are read depends on the kind.
struct FamilyArgs {
    /// external / semi_external: B0 (a basis of Q^r appended after A).
    /// generalized_external: Y (appended after A).
    std::vector<Vector> appended;
    /// semi_external: the upper set J, as flats of A (positions into A).
    std::vector<IndexSet> upper_set;
    /// semi_internal: I0 (positions into A).
    IndexSet independent_set;
    /// generalized_external: kappa on flats of A; flats not listed get 0.
    std::map<IndexSet, unsigned> kappa;
};

struct BasisFamily {
    VectorList X;  // A, possibly followed by the appended vectors
    std::vector<BasisId> bases;
    std::vector<std::string> warnings;
};

BasisFamily standard_family(FamilyKind kind, const VectorList& A, const FamilyArgs& args);

/// Greedy extension of an independent set of X by the positions in `extenders`, in order.
BasisId greedy_extension(const VectorList& X, const IndexSet& independent, const IndexSet& extenders);

/// A realized forward exchange matroid (X, B(X), B').
class ForwardExchangeMatroid {
public:
    ForwardExchangeMatroid(VectorList X, std::vector<BasisId> bprime);

    /// Runs the exhaustive check; returns its result and records it.
    ForwardExchangeResult validate();

    const VectorList& vectors() const { return X_; }
    const std::vector<BasisId>& bases() const { return bprime_; }
    bool validated() const { return validated_; }

private:
    VectorList X_;
    std::vector<BasisId> bprime_;
    bool validated_ = false;
};

/// Tutte polynomial of a validated forward exchange matroid.
TuttePolynomial fem_tutte(const ForwardExchangeMatroid& fem);

}  // namespace zonotopal

#endif
