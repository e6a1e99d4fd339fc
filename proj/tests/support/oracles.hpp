#ifndef ZONOTOPAL_TESTS_ORACLES_HPP
#define ZONOTOPAL_TESTS_ORACLES_HPP

// Independent reference computations. None of these call the code path they check.

#include "zonotopal/matroid.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace oracles {

using namespace zonotopal;

/// Activities from fundamental circuits / cocircuits (coordinates in the basis).
inline Activities activities_by_circuits(const VectorList& X, const BasisId& b) {
    const Matrix m = X.columns(b.indices);
    Activities act;
    for (std::size_t x = 0; x < X.size(); ++x) {
        if (b.contains(x)) continue;
        const Vector lambda = solve(m, X[x]);
        std::size_t top = x;
        for (std::size_t k = 0; k < lambda.size(); ++k)
            if (lambda[k] != 0) top = std::max(top, b.indices[k]);
        if (top == x) act.external.push_back(x);
    }
    for (std::size_t k = 0; k < b.indices.size(); ++k) {
        std::size_t top = 0;
        for (std::size_t y = 0; y < X.size(); ++y)
            if (solve(m, X[y])[k] != 0) top = y;
        if (top == b.indices[k]) act.internal.push_back(b.indices[k]);
    }
    return act;
}

/// Tutte polynomial by deletion-contraction on the rank function.
class TutteByRecursion {
public:
    explicit TutteByRecursion(const VectorList& X) : X_(X) {}

    TuttePolynomial operator()() { return solve(full_mask(), 0); }

private:
    using Mask = std::uint32_t;

    Mask full_mask() const { return X_.size() == 32 ? ~Mask{0} : (Mask{1} << X_.size()) - 1; }

    std::size_t rank(Mask m) {
        if (const auto it = ranks_.find(m); it != ranks_.end()) return it->second;
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < X_.size(); ++i)
            if (m & (Mask{1} << i)) vs.push_back(X_[i]);
        return ranks_[m] = rank_of_vectors(vs, X_.dim());
    }

    /// Minor with ground set `ground`, having contracted `contracted`.
    TuttePolynomial solve(Mask ground, Mask contracted) {
        const auto key = std::make_pair(ground, contracted);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        TuttePolynomial t;
        if (ground == 0) {
            t.add(0, 0);
            return memo_[key] = t;
        }
        const std::size_t e = static_cast<std::size_t>(__builtin_ctz(ground));
        const Mask bit = Mask{1} << e;
        const Mask rest = ground & ~bit;
        const bool loop = rank(contracted | bit) == rank(contracted);
        const bool coloop = rank(rest | contracted) < rank(ground | contracted);
        auto shift = [](const TuttePolynomial& p, unsigned dx, unsigned dy) {
            TuttePolynomial q;
            for (const auto& [k, c] : p.coefficients()) q.add(k.first + dx, k.second + dy, c);
            return q;
        };
        if (loop) {
            t = shift(solve(rest, contracted), 0, 1);
        } else if (coloop) {
            t = shift(solve(rest, contracted | bit), 1, 0);
        } else {
            t = solve(rest, contracted);
            const TuttePolynomial con = solve(rest, contracted | bit);
            for (const auto& [k, c] : con.coefficients()) t.add(k.first, k.second, c);
        }
        return memo_[key] = t;
    }

    const VectorList& X_;
    std::map<Mask, std::size_t> ranks_;
    std::map<std::pair<Mask, Mask>, TuttePolynomial> memo_;
};

/// Complements of hyperplanes (rank r-1 flats): the cocircuits of the full matroid.
inline std::vector<IndexSet> cocircuits_by_hyperplanes(const VectorList& X) {
    std::vector<IndexSet> out;
    for (const Flat& f : flats(X)) {
        if (!f.corank_one) continue;
        IndexSet c;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (!std::binary_search(f.elements.begin(), f.elements.end(), i)) c.push_back(i);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Box spline of N = r + 1 vectors: the fiber {z in [0,1]^N : Xz = u} is a segment
/// z0 + t k with k the cofactor kernel vector, and |k|^2 = det(X X^T) cancels the
/// normalization, leaving the length of the parameter interval.
inline Rational box_spline_segment(const VectorList& X, const Vector& u) {
    const std::size_t r = X.dim(), n = X.size();
    if (n != r + 1) throw ContractViolation("box_spline_segment: needs N = r + 1");
    Vector k(n);
    for (std::size_t j = 0; j < n; ++j) {
        IndexSet others;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) others.push_back(i);
        k[j] = determinant(X.columns(others)) * ((j % 2) ? -1 : 1);
    }
    // z0 supported on the first basis found.
    Vector z0(n);
    for (std::size_t skip = 0; skip < n; ++skip) {
        if (k[skip] == 0) continue;
        IndexSet cols;
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) cols.push_back(i);
        const Vector sol = solve(X.columns(cols), u);
        for (std::size_t i = 0; i < cols.size(); ++i) z0[cols[i]] = sol[i];
        break;
    }
    bool bounded = false;
    Rational lo, hi;
    for (std::size_t j = 0; j < n; ++j) {
        if (k[j] == 0) {
            if (z0[j] < 0 || z0[j] > 1) return Rational(0);
            continue;
        }
        Rational a = (0 - z0[j]) / k[j], b = (1 - z0[j]) / k[j];
        if (a > b) std::swap(a, b);
        if (!bounded) {
            lo = a;
            hi = b;
            bounded = true;
        } else {
            lo = std::max(lo, a);
            hi = std::min(hi, b);
        }
    }
    return hi > lo ? Rational(hi - lo) : Rational(0);
}

}  // namespace oracles

#endif
