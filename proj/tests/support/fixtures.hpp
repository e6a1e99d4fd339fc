#ifndef ZONOTOPAL_TESTS_FIXTURES_HPP
#define ZONOTOPAL_TESTS_FIXTURES_HPP

#include "zonotopal/forward_exchange.hpp"
#include "zonotopal/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace zonotopal;

inline Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

/// Builds a BasisId from 1-based positions.
inline BasisId basis(std::initializer_list<std::size_t> one_based) {
    BasisId b;
    for (std::size_t i : one_based) b.indices.push_back(i - 1);
    return b;
}

inline MPoly poly_t(const std::string& text, std::size_t nvars) { return parse_mpoly(text, Side::T, nvars); }
inline MPoly poly_s(const std::string& text, std::size_t nvars) { return parse_mpoly(text, Side::S, nvars); }

/// (e1, e2, e1+e2)
inline VectorList plane3() { return VectorList(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}); }

/// (e1, e2, e3, a, b) with a = (1,2,3) and b = (1,3,7); every 3-subset is a basis.
inline VectorList space5() {
    return VectorList(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 2, 3}), vec({1, 3, 7})});
}

inline std::vector<BasisId> space5_bprime() {
    return {basis({1, 2, 3}), basis({1, 2, 4}), basis({1, 2, 5}), basis({1, 3, 4}),
            basis({1, 3, 5}), basis({2, 3, 4}), basis({2, 3, 5})};
}

/// x1 = e1, x2 = e2, x_i = (i-2, 1) for i >= 3.
inline VectorList plane_chain(std::size_t n) {
    std::vector<Vector> v{vec({1, 0}), vec({0, 1})};
    for (std::size_t i = 3; i <= n; ++i) v.push_back(vec({static_cast<long>(i) - 2, 1}));
    return VectorList(2, std::move(v));
}

/// {(x1, x_i) : i = 2..N} u {(x2, x3)}, sorted.
inline std::vector<BasisId> plane_chain_bprime(std::size_t n) {
    std::vector<BasisId> out;
    for (std::size_t i = 2; i <= n; ++i) out.push_back(basis({1, i}));
    out.push_back(basis({2, 3}));
    return out;
}

// ---------------------------------------------------------------------------
// random instances

/// Spanning list without zero vectors, integer entries in [-range, range].
inline VectorList random_list(std::mt19937& rng, std::size_t r, std::size_t n, int range = 2) {
    std::uniform_int_distribution<int> coord(-range, range);
    while (true) {
        std::vector<Vector> vs;
        while (vs.size() < n) {
            Vector v;
            bool zero = true;
            for (std::size_t k = 0; k < r; ++k) {
                v.emplace_back(coord(rng));
                zero = zero && v.back() == 0;
            }
            if (!zero) vs.push_back(std::move(v));
        }
        VectorList X(r, std::move(vs));
        if (is_spanning(X)) return X;
    }
}

/// Random nonempty subset of the bases, closed under forward exchange.
inline std::vector<BasisId> random_fe_bases(std::mt19937& rng, const VectorList& X) {
    const std::vector<BasisId> all = bases(X);
    std::bernoulli_distribution keep(0.3);
    std::vector<BasisId> seed;
    for (const BasisId& b : all)
        if (keep(rng)) seed.push_back(b);
    if (seed.empty()) seed.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
    return forward_exchange_closure(X, seed);
}

/// Totally unimodular list: columns of the incidence matrix of a random directed graph
/// on r+1 vertices with the last vertex deleted, plus a spanning tree so it spans.
inline VectorList random_unimodular(std::mt19937& rng, std::size_t r, std::size_t extra) {
    std::uniform_int_distribution<std::size_t> vertex(0, r);
    std::vector<Vector> vs;
    auto edge = [&](std::size_t a, std::size_t b) {
        Vector v(r);
        if (a < r) v[a] += 1;
        if (b < r) v[b] -= 1;
        vs.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < r; ++i) edge(i, r);  // star to the deleted vertex
    for (std::size_t k = 0; k < extra; ++k) {
        std::size_t a = vertex(rng), b = vertex(rng);
        while (b == a) b = vertex(rng);
        edge(a, b);
    }
    std::shuffle(vs.begin(), vs.end(), rng);
    return VectorList(r, std::move(vs));
}

}  // namespace fixtures

#endif
