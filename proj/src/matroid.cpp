#include "zonotopal/matroid.hpp"

#include <algorithm>
#include <set>

namespace zonotopal {

VectorList::VectorList(std::size_t dim, std::vector<Vector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw ContractViolation("VectorList: ambient dimension must be positive");
    if (vectors_.empty()) throw ContractViolation("VectorList: list is empty");
    for (const Vector& v : vectors_)
        if (v.size() != dim_) throw DimensionError("VectorList: vector has wrong length");
}

std::vector<Vector> VectorList::select(const IndexSet& s) const {
    std::vector<Vector> out;
    out.reserve(s.size());
    for (std::size_t i : s) out.push_back(vectors_.at(i));
    return out;
}

Matrix VectorList::columns(const IndexSet& s) const { return Matrix::from_columns(select(s), dim_); }

IndexSet VectorList::all_indices() const {
    IndexSet s(size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
    return s;
}

std::size_t rank_of(const VectorList& X, const IndexSet& s) {
    const std::vector<Vector> v = X.select(s);
    return rank_of_vectors(v, X.dim());
}

IndexSet closure(const VectorList& X, const IndexSet& s) {
    const std::size_t base = rank_of(X, s);
    IndexSet out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (std::binary_search(s.begin(), s.end(), i)) {
            out.push_back(i);
            continue;
        }
        IndexSet with = s;
        with.insert(std::upper_bound(with.begin(), with.end(), i), i);
        if (rank_of(X, with) == base) out.push_back(i);
    }
    return out;
}

bool is_spanning(const VectorList& X) { return rank_of(X, X.all_indices()) == X.dim(); }

bool is_loop(const VectorList& X, std::size_t i) {
    return std::all_of(X[i].begin(), X[i].end(), [](const Rational& q) { return q == 0; });
}

bool is_coloop(const VectorList& X, std::size_t i) {
    IndexSet rest;
    for (std::size_t j = 0; j < X.size(); ++j)
        if (j != i) rest.push_back(j);
    return rank_of(X, rest) < rank_of(X, X.all_indices());
}

void validate_basis(const VectorList& X, const BasisId& b) {
    if (b.indices.size() != X.dim())
        throw ContractViolation("basis " + to_string(b) + " does not have " + std::to_string(X.dim()) + " elements");
    for (std::size_t k = 0; k < b.indices.size(); ++k) {
        if (b.indices[k] >= X.size()) throw ContractViolation("basis " + to_string(b) + " indexes past the list");
        if (k && b.indices[k] <= b.indices[k - 1])
            throw ContractViolation("basis " + to_string(b) + " is not strictly increasing");
    }
    if (determinant(X.columns(b.indices)) == 0)
        throw ContractViolation("basis " + to_string(b) + " is linearly dependent");
}

Rational basis_determinant(const VectorList& X, const BasisId& b) {
    validate_basis(X, b);
    return determinant(X.columns(b.indices));
}

namespace {

bool next_combination(IndexSet& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

using Mask = std::uint64_t;

Mask to_mask(const IndexSet& s) {
    Mask m = 0;
    for (std::size_t i : s) m |= Mask{1} << i;
    return m;
}

IndexSet from_mask(Mask m, std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (m & (Mask{1} << i)) s.push_back(i);
    return s;
}

void check_enumerable(const VectorList& X, const char* what) {
    if (X.size() > 24) throw ContractViolation(std::string(what) + ": list too long for subset enumeration");
}

}  // namespace

std::vector<BasisId> bases(const VectorList& X) {
    if (!is_spanning(X)) throw ContractViolation("bases: the list does not span Q^r");
    std::vector<BasisId> out;
    const std::size_t r = X.dim();
    if (r > X.size()) return out;
    IndexSet c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = i;
    do {
        if (determinant(X.columns(c)) != 0) out.push_back(BasisId{c});
    } while (next_combination(c, X.size()));
    return out;
}

std::vector<Flat> flats(const VectorList& X) {
    check_enumerable(X, "flats");
    const std::size_t n = X.size();
    const std::size_t full = rank_of(X, X.all_indices());
    std::set<std::pair<std::size_t, IndexSet>> found;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const IndexSet s = from_mask(m, n);
        // Closures of independent sets already give every flat.
        if (rank_of(X, s) != s.size()) continue;
        found.emplace(s.size(), closure(X, s));
    }
    std::vector<Flat> out;
    for (const auto& [rk, elements] : found) out.push_back(Flat{elements, rk, rk + 1 == full});
    return out;
}

std::vector<IndexSet> cocircuits(const VectorList& X, const std::vector<BasisId>& bprime) {
    if (bprime.empty()) throw ContractViolation("cocircuits: empty set of bases");
    check_enumerable(X, "cocircuits");
    for (const BasisId& b : bprime) validate_basis(X, b);
    const std::size_t n = X.size();
    std::vector<Mask> basis_masks;
    for (const BasisId& b : bprime) basis_masks.push_back(to_mask(b.indices));
    auto hits_all = [&](Mask c) {
        return std::all_of(basis_masks.begin(), basis_masks.end(), [c](Mask b) { return (b & c) != 0; });
    };

    std::vector<IndexSet> out;
    for (Mask c = 1; c < (Mask{1} << n); ++c) {
        if (!hits_all(c)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if ((c & (Mask{1} << i)) && hits_all(c & ~(Mask{1} << i))) minimal = false;
        if (minimal) out.push_back(from_mask(c, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Activities activity_sets(const VectorList& X, const BasisId& b) {
    validate_basis(X, b);
    Activities act;
    for (std::size_t x = 0; x < X.size(); ++x) {
        if (b.contains(x)) continue;
        IndexSet below;
        for (std::size_t bi : b.indices)
            if (bi <= x) below.push_back(bi);
        const IndexSet cl = closure(X, below);
        if (std::binary_search(cl.begin(), cl.end(), x)) act.external.push_back(x);
    }
    for (std::size_t bi : b.indices) {
        IndexSet rest;
        for (std::size_t other : b.indices)
            if (other != bi) rest.push_back(other);
        const IndexSet cl = closure(X, rest);
        // max of X \ clos(B \ b); nonempty since it contains b.
        std::size_t top = 0;
        for (std::size_t y = 0; y < X.size(); ++y)
            if (!std::binary_search(cl.begin(), cl.end(), y)) top = y;
        if (top == bi) act.internal.push_back(bi);
    }
    return act;
}

void TuttePolynomial::add(unsigned i, unsigned j, long long c) {
    auto& slot = coefficients_[{i, j}];
    slot += c;
    if (slot == 0) coefficients_.erase({i, j});
}

long long TuttePolynomial::coefficient(unsigned i, unsigned j) const {
    const auto it = coefficients_.find({i, j});
    return it == coefficients_.end() ? 0 : it->second;
}

Rational TuttePolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational sum(0);
    for (const auto& [key, c] : coefficients_) sum += Rational(static_cast<long>(c)) * power(x, key.first) * power(y, key.second);
    return sum;
}

std::string to_string(const TuttePolynomial& t) {
    std::vector<std::pair<TuttePolynomial::Key, long long>> terms(t.coefficients().begin(), t.coefficients().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long long mag = c < 0 ? -c : c;
        std::string mono;
        if (key.first) mono += key.first == 1 ? "x" : "x^" + std::to_string(key.first);
        if (key.second) mono += key.second == 1 ? "y" : "y^" + std::to_string(key.second);
        if (mono.empty() || mag != 1) out += std::to_string(mag);
        out += mono;
    }
    return out;
}

TuttePolynomial tutte_restricted(const VectorList& X, const std::vector<BasisId>& bprime) {
    TuttePolynomial t;
    for (const BasisId& b : bprime) {
        const Activities act = activity_sets(X, b);
        t.add(static_cast<unsigned>(act.internal.size()), static_cast<unsigned>(act.external.size()));
    }
    return t;
}

TuttePolynomial tutte(const VectorList& X) { return tutte_restricted(X, bases(X)); }

Rational zonotope_volume(const VectorList& X) {
    Rational vol(0);
    for (const BasisId& b : bases(X)) vol += abs(determinant(X.columns(b.indices)));
    return vol;
}

VectorList deletion(const VectorList& X, std::size_t i) {
    if (i >= X.size()) throw ContractViolation("deletion: index out of range");
    if (X.size() == 1) throw ContractViolation("deletion: cannot delete the only vector");
    std::vector<Vector> rest;
    for (std::size_t j = 0; j < X.size(); ++j)
        if (j != i) rest.push_back(X[j]);
    return VectorList(X.dim(), std::move(rest));
}

VectorList contraction(const VectorList& X, std::size_t i) {
    if (i >= X.size()) throw ContractViolation("contraction: index out of range");
    if (is_loop(X, i)) throw ContractViolation("contraction: cannot contract a loop");
    const std::size_t r = X.dim();
    if (r == 1) throw ContractViolation("contraction: result would be zero-dimensional");
    if (X.size() == 1) throw ContractViolation("contraction: nothing left after contracting");

    std::vector<Vector> frame{X[i]};
    for (std::size_t j = 0; j < r && frame.size() < r; ++j) {
        Vector e(r);
        e[j] = 1;
        frame.push_back(e);
        if (rank_of_vectors(frame, r) < frame.size()) frame.pop_back();
    }
    const Matrix m = Matrix::from_columns(frame, r);
    std::vector<Vector> image;
    for (std::size_t j = 0; j < X.size(); ++j) {
        if (j == i) continue;
        const Vector coords = solve(m, X[j]);
        image.emplace_back(coords.begin() + 1, coords.end());
    }
    return VectorList(r - 1, std::move(image));
}

BasisId shift_after_removal(const BasisId& b, std::size_t removed) {
    BasisId out;
    for (std::size_t j : b.indices) {
        if (j == removed) continue;
        out.indices.push_back(j > removed ? j - 1 : j);
    }
    return out;
}

}  // namespace zonotopal
