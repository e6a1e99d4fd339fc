#include "zonotopal/forward_exchange.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace zonotopal {

IndexSet FlagLevel::elements() const {
    IndexSet all = positive;
    all.insert(all.end(), negative.begin(), negative.end());
    std::sort(all.begin(), all.end());
    return all;
}

FlagPosition flag_position(const Matrix& basis_inverse, const Vector& u) {
    const Vector coords = basis_inverse * u;
    for (std::size_t i = coords.size(); i-- > 0;)
        if (coords[i] != 0) return {i, coords[i] > 0};
    throw ContractViolation("flag_position: zero vector has no flag level");
}

std::vector<FlagLevel> flag_partition(const VectorList& X, const BasisId& b) {
    validate_basis(X, b);
    const Matrix inv = inverse(X.columns(b.indices));
    std::vector<FlagLevel> levels(X.dim());
    for (std::size_t x = 0; x < X.size(); ++x) {
        if (is_loop(X, x)) continue;
        const FlagPosition pos = flag_position(inv, X[x]);
        (pos.positive ? levels[pos.level].positive : levels[pos.level].negative).push_back(x);
    }
    return levels;
}

namespace {

BasisId exchange(const BasisId& b, std::size_t out, std::size_t in) {
    BasisId next;
    for (std::size_t i : b.indices)
        if (i != out) next.indices.push_back(i);
    next.indices.push_back(in);
    std::sort(next.indices.begin(), next.indices.end());
    return next;
}

/// Bases (B \ b_i) u x required by the forward exchange property for one B.
std::vector<std::pair<std::size_t, BasisId>> required_exchanges(const VectorList& X, const BasisId& b,
                                                                  std::vector<std::size_t>* elements = nullptr) {
    const Activities act = activity_sets(X, b);
    const std::vector<FlagLevel> levels = flag_partition(X, b);
    std::vector<std::pair<std::size_t, BasisId>> out;
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t x : levels[i].elements()) {
            if (std::binary_search(act.external.begin(), act.external.end(), x)) continue;
            out.emplace_back(i, exchange(b, b.indices[i], x));
            if (elements) elements->push_back(x);
        }
    return out;
}

}  // namespace

ForwardExchangeResult is_forward_exchange(const VectorList& X, const std::vector<BasisId>& bprime) {
    if (bprime.empty()) throw ContractViolation("is_forward_exchange: empty set of bases");
    const std::set<BasisId> members(bprime.begin(), bprime.end());
    for (const BasisId& b : bprime) {
        std::vector<std::size_t> elements;
        const auto required = required_exchanges(X, b, &elements);
        for (std::size_t k = 0; k < required.size(); ++k)
            if (!members.contains(required[k].second))
                return {false, ExchangeViolation{b, required[k].first, elements[k]}};
    }
    return {};
}

std::vector<BasisId> forward_exchange_closure(const VectorList& X, const std::vector<BasisId>& seed) {
    std::set<BasisId> members(seed.begin(), seed.end());
    std::vector<BasisId> pending(members.begin(), members.end());
    while (!pending.empty()) {
        const BasisId b = pending.back();
        pending.pop_back();
        for (auto& [level, next] : required_exchanges(X, b))
            if (members.insert(next).second) pending.push_back(next);
    }
    return {members.begin(), members.end()};
}

bool is_placeable(std::size_t x, const std::vector<BasisId>& bprime) {
    const std::set<BasisId> members(bprime.begin(), bprime.end());
    for (const BasisId& b : bprime) {
        if (b.contains(x)) continue;
        const bool ok = std::any_of(b.indices.begin(), b.indices.end(),
                                    [&](std::size_t out) { return members.contains(exchange(b, out, x)); });
        if (!ok) return false;
    }
    return true;
}

bool is_placible(const VectorList& X, const std::vector<BasisId>& bprime) {
    if (bprime.empty()) throw ContractViolation("is_placible: empty set of bases");
    for (const BasisId& b : bprime) validate_basis(X, b);
    std::map<std::vector<BasisId>, bool> memo;

    std::function<bool(const std::vector<BasisId>&)> placible = [&](const std::vector<BasisId>& set) -> bool {
        if (set.size() == 1) return true;
        if (const auto it = memo.find(set); it != memo.end()) return it->second;
        bool result = false;
        for (std::size_t x = 0; x < X.size() && !result; ++x) {
            std::vector<BasisId> with, without;
            for (const BasisId& b : set) (b.contains(x) ? with : without).push_back(b);
            if (with.empty() || without.empty()) continue;
            if (!is_placeable(x, set)) continue;
            result = placible(with) && placible(without);
        }
        memo.emplace(set, result);
        return result;
    };

    std::vector<BasisId> sorted = bprime;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return placible(sorted);
}

// ---------------------------------------------------------------------------
// standard families

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "external") return FamilyKind::external;
    if (name == "internal") return FamilyKind::internal;
    if (name == "semi_external") return FamilyKind::semi_external;
    if (name == "semi_internal") return FamilyKind::semi_internal;
    if (name == "generalized_external") return FamilyKind::generalized_external;
    throw ContractViolation("unknown basis family \"" + name + "\"");
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::external: return "external";
        case FamilyKind::internal: return "internal";
        case FamilyKind::semi_external: return "semi_external";
        case FamilyKind::semi_internal: return "semi_internal";
        case FamilyKind::generalized_external: return "generalized_external";
    }
    return "?";
}

BasisId greedy_extension(const VectorList& X, const IndexSet& independent, const IndexSet& extenders) {
    IndexSet current = independent;
    for (std::size_t e : extenders) {
        if (current.size() == X.dim()) break;
        IndexSet with = current;
        with.push_back(e);
        std::sort(with.begin(), with.end());
        if (rank_of(X, with) == with.size()) current = std::move(with);
    }
    if (current.size() != X.dim()) throw ContractViolation("greedy_extension: extenders do not complete a basis");
    return BasisId{current};
}

namespace {

std::vector<IndexSet> independent_subsets(const VectorList& A) {
    if (A.size() > 24) throw ContractViolation("standard_family: list too long for subset enumeration");
    std::vector<IndexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << A.size()); ++m) {
        IndexSet s;
        for (std::size_t i = 0; i < A.size(); ++i)
            if (m & (std::uint64_t{1} << i)) s.push_back(i);
        if (s.size() <= A.dim() && rank_of(A, s) == s.size()) out.push_back(std::move(s));
    }
    return out;
}

VectorList append(const VectorList& A, const std::vector<Vector>& extra) {
    std::vector<Vector> all = A.vectors();
    for (const Vector& v : extra) {
        if (v.size() != A.dim()) throw DimensionError("standard_family: appended vector has wrong dimension");
        all.push_back(v);
    }
    return VectorList(A.dim(), std::move(all));
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<IndexSet> flat_sets(const VectorList& A) {
    std::vector<IndexSet> out;
    for (const Flat& f : flats(A)) out.push_back(f.elements);
    return out;
}

std::vector<BasisId> external_like(const VectorList& A, const VectorList& X, const std::vector<IndexSet>* upper_set) {
    IndexSet extenders;
    for (std::size_t j = A.size(); j < X.size(); ++j) extenders.push_back(j);
    std::set<BasisId> out;
    for (const IndexSet& I : independent_subsets(A)) {
        if (upper_set) {
            const IndexSet cl = closure(A, I);
            if (std::find(upper_set->begin(), upper_set->end(), cl) == upper_set->end()) continue;
        }
        out.insert(greedy_extension(X, I, extenders));
    }
    return {out.begin(), out.end()};
}

void check_generic(const VectorList& X, std::size_t first_generic) {
    const std::size_t full = rank_of(X, X.all_indices());
    for (std::size_t y = first_generic; y < X.size(); ++y) {
        IndexSet others;
        for (std::size_t j = 0; j < X.size(); ++j)
            if (j != y) others.push_back(j);
        // Independent Z among the others with rank < full and y in span(Z) violates genericity.
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << others.size()); ++m) {
            IndexSet z;
            for (std::size_t k = 0; k < others.size(); ++k)
                if (m & (std::uint64_t{1} << k)) z.push_back(others[k]);
            if (z.size() >= full || rank_of(X, z) != z.size()) continue;
            IndexSet with = z;
            with.push_back(y);
            std::sort(with.begin(), with.end());
            if (rank_of(X, with) == z.size())
                throw ContractViolation("standard_family: Y is not generic (y_" + std::to_string(y + 1 - first_generic) +
                                        " lies in the span of " + index_set_to_string(z) + ")");
        }
    }
}

}  // namespace

BasisFamily standard_family(FamilyKind kind, const VectorList& A, const FamilyArgs& args) {
    switch (kind) {
        case FamilyKind::external:
        case FamilyKind::semi_external: {
            if (args.appended.size() != A.dim())
                throw ContractViolation("standard_family: B0 must consist of r vectors");
            if (rank_of_vectors(args.appended, A.dim()) != A.dim())
                throw ContractViolation("standard_family: B0 is not a basis");
            VectorList X = append(A, args.appended);
            if (kind == FamilyKind::external) {
                auto family = external_like(A, X, nullptr);
                return {std::move(X), std::move(family), {}};
            }
            const std::vector<IndexSet> all_flats = flat_sets(A);
            for (const IndexSet& f : args.upper_set)
                if (std::find(all_flats.begin(), all_flats.end(), f) == all_flats.end())
                    throw ContractViolation("standard_family: J member " + index_set_to_string(f) + " is not a flat of A");
            for (const IndexSet& member : args.upper_set)
                for (const IndexSet& f : all_flats)
                    if (is_subset(member, f) &&
                        std::find(args.upper_set.begin(), args.upper_set.end(), f) == args.upper_set.end())
                        throw ContractViolation("standard_family: J is not an upper set (missing " +
                                                index_set_to_string(f) + ")");
            auto family = external_like(A, X, &args.upper_set);
            if (family.empty()) throw ContractViolation("standard_family: J selects no bases");
            return {std::move(X), std::move(family), {}};
        }
        case FamilyKind::internal:
        case FamilyKind::semi_internal: {
            std::vector<std::string> warnings;
            const IndexSet& I0 = args.independent_set;
            if (kind == FamilyKind::semi_internal) {
                for (std::size_t i : I0)
                    if (i >= A.size()) throw ContractViolation("standard_family: I0 indexes past A");
                if (!std::is_sorted(I0.begin(), I0.end()) || rank_of(A, I0) != I0.size())
                    throw ContractViolation("standard_family: I0 is not an independent set");
                if (!I0.empty()) warnings.push_back("maximality of the elements of I0 in A is not checked");
            }
            std::vector<BasisId> family;
            for (const BasisId& b : bases(A)) {
                const Activities act = activity_sets(A, b);
                const bool ok = std::none_of(act.internal.begin(), act.internal.end(), [&](std::size_t x) {
                    return kind == FamilyKind::internal || std::binary_search(I0.begin(), I0.end(), x);
                });
                if (ok) family.push_back(b);
            }
            return {A, std::move(family), std::move(warnings)};
        }
        case FamilyKind::generalized_external: {
            VectorList X = append(A, args.appended);
            if (!is_spanning(X)) throw ContractViolation("standard_family: (A, Y) does not span");
            const std::vector<IndexSet> all_flats = flat_sets(A);
            auto kappa = [&](const IndexSet& flat) -> unsigned {
                const auto it = args.kappa.find(flat);
                return it == args.kappa.end() ? 0u : it->second;
            };
            for (const auto& [flat, value] : args.kappa)
                if (std::find(all_flats.begin(), all_flats.end(), flat) == all_flats.end())
                    throw ContractViolation("standard_family: kappa is given on " + index_set_to_string(flat) +
                                            ", which is not a flat of A");
            for (const IndexSet& f1 : all_flats)
                for (const IndexSet& f2 : all_flats)
                    if (is_subset(f1, f2) && kappa(f1) > kappa(f2))
                        throw ContractViolation("standard_family: kappa is not increasing");
            check_generic(X, A.size());

            std::vector<BasisId> family;
            for (const BasisId& b : bases(X)) {
                IndexSet in_a;
                std::size_t in_y = 0;
                std::size_t highest_y = 0;
                for (std::size_t i : b.indices) {
                    if (i < A.size()) {
                        in_a.push_back(i);
                    } else {
                        ++in_y;
                        highest_y = i - A.size() + 1;
                    }
                }
                if (in_y == 0 || highest_y <= kappa(closure(A, in_a)) + in_y) family.push_back(b);
            }
            return {std::move(X), std::move(family), {}};
        }
    }
    throw ContractViolation("standard_family: unknown kind");
}

// ---------------------------------------------------------------------------

ForwardExchangeMatroid::ForwardExchangeMatroid(VectorList X, std::vector<BasisId> bprime)
    : X_(std::move(X)), bprime_(std::move(bprime)) {
    if (bprime_.empty()) throw ContractViolation("forward exchange matroid: empty set of bases");
    for (const BasisId& b : bprime_) validate_basis(X_, b);
}

ForwardExchangeResult ForwardExchangeMatroid::validate() {
    ForwardExchangeResult result = is_forward_exchange(X_, bprime_);
    validated_ = result.holds;
    return result;
}

TuttePolynomial fem_tutte(const ForwardExchangeMatroid& fem) {
    if (!fem.validated()) throw ContractViolation("fem_tutte: forward exchange property not validated");
    return tutte_restricted(fem.vectors(), fem.bases());
}

}  // namespace zonotopal
