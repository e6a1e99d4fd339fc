#include "zonotopal/forward_exchange.hpp"

#include "../support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace zonotopal;
using fixtures::basis;
using fixtures::vec;

TEST_CASE("flag partition of (e1, e2, e1+e2)") {
    const VectorList X = fixtures::plane3();
    const auto levels = flag_partition(X, basis({1, 3}));
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].positive == IndexSet{0});
    CHECK(levels[0].negative.empty());
    CHECK(levels[1].positive == IndexSet{1, 2});
    CHECK(levels[1].negative.empty());
}

TEST_CASE("flag partition records orientation") {
    const VectorList X(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({1, -1}), vec({0, 0})});
    const auto levels = flag_partition(X, basis({1, 2}));
    CHECK(levels[0].positive == IndexSet{0});
    CHECK(levels[0].negative == IndexSet{2});
    CHECK(levels[1].positive == IndexSet{1});
    CHECK(levels[1].negative == IndexSet{3});
    // loops sit in no level
    std::size_t total = 0;
    for (const FlagLevel& l : levels) total += l.elements().size();
    CHECK(total == 4);
}

TEST_CASE("forward exchange on (e1, e2, e1+e2)") {
    const VectorList X = fixtures::plane3();
    CHECK(is_forward_exchange(X, bases(X)).holds);
    CHECK(is_forward_exchange(X, {basis({1, 2}), basis({2, 3})}).holds);

    const ForwardExchangeResult r = is_forward_exchange(X, {basis({1, 3})});
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->basis == basis({1, 3}));
    CHECK(r.witness->level == 1);
    CHECK(r.witness->element == 1);
}

TEST_CASE("(e1, e2, e3, a, b): forward exchange, placible, FEM Tutte polynomial") {
    ForwardExchangeMatroid fem(fixtures::space5(), fixtures::space5_bprime());
    CHECK_THROWS_AS(fem_tutte(fem), ContractViolation);
    CHECK(fem.validate().holds);
    CHECK(to_string(fem_tutte(fem)) == "3x + 3y + y^2");
    CHECK(is_placible(fem.vectors(), fem.bases()));
}

TEST_CASE("the plane chain is forward exchange for several N") {
    for (std::size_t n = 3; n <= 6; ++n) {
        const VectorList X = fixtures::plane_chain(n);
        CHECK(is_forward_exchange(X, fixtures::plane_chain_bprime(n)).holds);
        CHECK(is_placible(X, fixtures::plane_chain_bprime(n)));
    }
}

TEST_CASE("placeability") {
    const std::vector<BasisId> b{basis({1, 2}), basis({1, 3}), basis({2, 3})};
    CHECK(is_placeable(0, b));
    CHECK_FALSE(is_placeable(2, {basis({1, 2})}));
    CHECK(is_placible(fixtures::plane3(), {basis({1, 2}), basis({2, 3})}));
    CHECK(is_placible(fixtures::plane3(), {basis({1, 3})}));
}

TEST_CASE("closure is the least forward-exchange superset") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 3;
        const VectorList X = fixtures::random_list(rng, r, r + 1 + trial % 4);
        const auto all = bases(X);
        const std::vector<BasisId> seed{all[trial % all.size()]};
        const auto closed = forward_exchange_closure(X, seed);
        CHECK(is_forward_exchange(X, closed).holds);
        CHECK(std::includes(closed.begin(), closed.end(), seed.begin(), seed.end()));
        CHECK(forward_exchange_closure(X, closed) == closed);
        CHECK(is_forward_exchange(X, all).holds);
    }
}

TEST_CASE("external family on (e1, e2, e1+e2) is B(X) restricted to extensions") {
    const BasisFamily fam = standard_family(FamilyKind::external, fixtures::plane3(), FamilyArgs{{vec({1, 0}), vec({0, 1})}});
    CHECK(fam.X.size() == 5);
    CHECK(is_forward_exchange(fam.X, fam.bases).holds);
    // one basis per independent set of A: {}, 3 singletons, 3 pairs
    CHECK(fam.bases.size() == 7);
}

TEST_CASE("internal family consists of bases without internal activity") {
    const VectorList X = fixtures::plane3();
    const BasisFamily fam = standard_family(FamilyKind::internal, X, {});
    CHECK(fam.bases == std::vector<BasisId>{basis({1, 2})});
    CHECK(is_forward_exchange(X, fam.bases).holds);
}

TEST_CASE("generalized external family reproduces the plane chain") {
    for (std::size_t n = 3; n <= 6; ++n) {
        const VectorList full = fixtures::plane_chain(n);
        const VectorList A(2, {full[0]});
        FamilyArgs args;
        for (std::size_t i = 1; i < n; ++i) args.appended.push_back(full[i]);
        args.kappa[{0}] = static_cast<unsigned>(n - 2);
        const BasisFamily fam = standard_family(FamilyKind::generalized_external, A, args);
        CHECK(fam.X == full);
        CHECK(fam.bases == fixtures::plane_chain_bprime(n));
    }
}

TEST_CASE("semi families") {
    const VectorList A = fixtures::plane3();
    FamilyArgs ext{{vec({1, 0}), vec({0, 1})}};
    ext.upper_set = {{0}, {0, 1, 2}};
    const BasisFamily semi = standard_family(FamilyKind::semi_external, A, ext);
    CHECK(is_forward_exchange(semi.X, semi.bases).holds);
    CHECK(semi.bases.size() == 4);  // {1}, and the three pairs

    FamilyArgs in;
    in.independent_set = {2};
    const BasisFamily si = standard_family(FamilyKind::semi_internal, A, in);
    CHECK(si.warnings.size() == 1);
    // x3 is internally active in (1,3) and (2,3)
    CHECK(si.bases == std::vector<BasisId>{basis({1, 2})});
    CHECK(is_forward_exchange(A, si.bases).holds);
}

TEST_CASE("family argument validation") {
    const VectorList A = fixtures::plane3();
    FamilyArgs down{{vec({1, 0}), vec({0, 1})}};
    down.upper_set = {{0}};
    CHECK_THROWS_AS(standard_family(FamilyKind::semi_external, A, down), ContractViolation);
    FamilyArgs notflat{{vec({1, 0}), vec({0, 1})}};
    notflat.upper_set = {{0, 1}};
    CHECK_THROWS_AS(standard_family(FamilyKind::semi_external, A, notflat), ContractViolation);
    CHECK_THROWS_AS(standard_family(FamilyKind::external, A, FamilyArgs{{vec({1, 0}), vec({2, 0})}}), ContractViolation);

    FamilyArgs dep;
    dep.independent_set = {0, 1, 2};
    CHECK_THROWS_AS(standard_family(FamilyKind::semi_internal, A, dep), ContractViolation);

    const VectorList line(2, {vec({1, 0})});
    FamilyArgs gen;
    gen.appended = {vec({0, 1}), vec({1, 1})};
    gen.kappa[{0}] = 0;
    gen.kappa[{}] = 1;
    CHECK_THROWS_AS(standard_family(FamilyKind::generalized_external, line, gen), ContractViolation);
    FamilyArgs parallel;
    parallel.appended = {vec({0, 1}), vec({2, 0})};
    CHECK_THROWS_AS(standard_family(FamilyKind::generalized_external, line, parallel), ContractViolation);
    CHECK_THROWS_AS(parse_family_kind("nope"), ContractViolation);
    CHECK(parse_family_kind("semi_internal") == FamilyKind::semi_internal);
}
