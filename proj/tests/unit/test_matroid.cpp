#include "zonotopal/matroid.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace zonotopal;
using fixtures::basis;
using fixtures::vec;

TEST_CASE("(e1, e2, e1+e2) bases and Tutte polynomial") {
    const VectorList X = fixtures::plane3();
    CHECK(bases(X) == std::vector<BasisId>{basis({1, 2}), basis({1, 3}), basis({2, 3})});
    CHECK(to_string(tutte(X)) == "x^2 + x + y");
    CHECK(zonotope_volume(X) == 3);
}

TEST_CASE("(e1, e2, e1+e2) activities") {
    const VectorList X = fixtures::plane3();
    const Activities a12 = activity_sets(X, basis({1, 2}));
    CHECK(a12.internal.empty());
    CHECK(a12.external == IndexSet{2});
    const Activities a13 = activity_sets(X, basis({1, 3}));
    CHECK(a13.internal == IndexSet{2});
    CHECK(a13.external.empty());
    const Activities a23 = activity_sets(X, basis({2, 3}));
    CHECK(a23.internal == IndexSet{1, 2});
    CHECK(a23.external.empty());
}

TEST_CASE("(e1, e2, e1+e2) flats and cocircuits") {
    const VectorList X = fixtures::plane3();
    const auto fl = flats(X);
    REQUIRE(fl.size() == 5);
    CHECK(fl.front().elements.empty());
    CHECK(fl.back().elements == IndexSet{0, 1, 2});
    CHECK(fl[1].corank_one);
    CHECK(cocircuits(X, bases(X)) == std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("(e1, e2, e3, a, b) B'-cocircuits") {
    const auto c = cocircuits(fixtures::space5(), fixtures::space5_bprime());
    CHECK(c == std::vector<IndexSet>{{0, 1}, {0, 2}, {0, 3, 4}, {1, 2}, {1, 3, 4}, {2, 3, 4}});
}

TEST_CASE("activities agree with the fundamental-circuit oracle") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 3;
        const VectorList X = fixtures::random_list(rng, r, r + 1 + trial % 4);
        for (const BasisId& b : bases(X)) {
            const Activities lib = activity_sets(X, b);
            const Activities ref = oracles::activities_by_circuits(X, b);
            CHECK(lib.internal == ref.internal);
            CHECK(lib.external == ref.external);
        }
    }
}

TEST_CASE("Tutte polynomial agrees with deletion-contraction and its evaluations") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 3;
        const VectorList X = fixtures::random_list(rng, r, r + trial % 5);
        const TuttePolynomial t = tutte(X);
        CHECK(t == oracles::TutteByRecursion(X)());
        CHECK(t.evaluate(1, 1) == static_cast<long>(bases(X).size()));
        CHECK(t.evaluate(2, 2) == power(Rational(2), static_cast<unsigned>(X.size())));
    }
}

TEST_CASE("cocircuits of the full matroid are hyperplane complements") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 3;
        const VectorList X = fixtures::random_list(rng, r, r + 1 + trial % 4);
        CHECK(cocircuits(X, bases(X)) == oracles::cocircuits_by_hyperplanes(X));
    }
}

TEST_CASE("every flat is closed and flats are ordered by rank") {
    std::mt19937 rng(404);
    const VectorList X = fixtures::random_list(rng, 3, 6);
    std::size_t last = 0;
    for (const Flat& f : flats(X)) {
        CHECK(closure(X, f.elements) == f.elements);
        CHECK(rank_of(X, f.elements) == f.rank);
        CHECK(f.rank >= last);
        last = f.rank;
    }
}

TEST_CASE("deletion, contraction and renumbering") {
    const VectorList X = fixtures::plane3();
    CHECK(deletion(X, 0) == VectorList(2, {vec({0, 1}), vec({1, 1})}));
    CHECK(contraction(X, 0) == VectorList(1, {vec({1}), vec({1})}));
    CHECK(shift_after_removal(basis({1, 3}), 0) == basis({2}));
    CHECK(shift_after_removal(basis({2, 3}), 0) == basis({1, 2}));
    CHECK_THROWS_AS(contraction(VectorList(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}), 0), ContractViolation);
}

TEST_CASE("coloops and loops") {
    const VectorList X(2, {vec({1, 0}), vec({0, 1}), vec({0, 2}), vec({0, 0})});
    CHECK(is_coloop(X, 0));
    CHECK_FALSE(is_coloop(X, 1));
    CHECK(is_loop(X, 3));
    // the loop is externally active for every basis
    for (const BasisId& b : bases(X)) CHECK(activity_sets(X, b).external.back() == 3);
}

TEST_CASE("invalid input is rejected") {
    const VectorList X = fixtures::plane3();
    CHECK_THROWS_AS(validate_basis(X, basis({1})), ContractViolation);
    CHECK_THROWS_AS(validate_basis(X, basis({2, 1})), ContractViolation);
    CHECK_THROWS_AS(validate_basis(X, basis({1, 4})), ContractViolation);
    const VectorList dependent(2, {vec({1, 1}), vec({2, 2}), vec({0, 1})});
    CHECK_THROWS_AS(validate_basis(dependent, basis({1, 2})), ContractViolation);
    CHECK_THROWS_AS(bases(VectorList(2, {vec({1, 0}), vec({2, 0})})), ContractViolation);
    CHECK_THROWS_AS(VectorList(2, {vec({1, 0, 0})}), DimensionError);
    CHECK_THROWS_AS(cocircuits(X, {}), ContractViolation);
}

TEST_CASE("unimodular lists: volume equals the number of bases") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        const VectorList X = fixtures::random_unimodular(rng, 2 + trial % 2, 2);
        CHECK(zonotope_volume(X) == static_cast<long>(bases(X).size()));
    }
}
