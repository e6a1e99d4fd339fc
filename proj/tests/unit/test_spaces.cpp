#include "zonotopal/spaces.hpp"

#include "../support/fixtures.hpp"

#include <doctest.h>

using namespace zonotopal;
using fixtures::basis;
using fixtures::poly_s;
using fixtures::poly_t;
using fixtures::vec;

namespace {

std::vector<MPoly> t_list(std::initializer_list<const char*> texts, std::size_t nvars) {
    std::vector<MPoly> out;
    for (const char* t : texts) out.push_back(poly_t(t, nvars));
    return out;
}

}  // namespace

TEST_CASE("Q polynomials of (e1, e2, e1+e2)") {
    const VectorList X = fixtures::plane3();
    CHECK(q_polynomial(X, basis({1, 2})) == poly_s("1", 2));
    CHECK(q_polynomial(X, basis({1, 3})) == poly_s("s2", 2));
    CHECK(q_polynomial(X, basis({2, 3})) == poly_s("s1", 2));
    const SpaceBasis p = p_space_basis(X, bases(X));
    CHECK(p.side == Side::S);
    CHECK(p.hilbert == HilbertVector{1, 2});
}

TEST_CASE("central D-space of (e1, e2, e1+e2)") {
    const VectorList X = fixtures::plane3();
    const SpaceBasis d = d_space_basis(X, bases(X));
    CHECK(d.elements == t_list({"1", "t1", "t2"}, 2));
}

TEST_CASE("R polynomials of (e1, e2, e1+e2)") {
    const VectorList X = fixtures::plane3();
    CHECK(r_polynomial(X, basis({1, 3})) == poly_t("t2", 2));
    CHECK(r_polynomial(X, basis({2, 3})) == poly_t("t1", 2));
    CHECK(r_polynomial(VectorList(2, {vec({1, 0}), vec({0, 1})}), basis({1, 2})) == poly_t("1", 2));
}

TEST_CASE("R polynomials do not depend on the shift seed") {
    const VectorList X = fixtures::space5();
    for (const BasisId& b : bases(X)) CHECK(r_polynomial(X, b, 2) == r_polynomial(X, b, 9));
}

TEST_CASE("(e1, e2, e1+e2) dual bases") {
    const VectorList X = fixtures::plane3();
    const SpaceBasis bcyr = bcyr_basis(X, bases(X));
    CHECK(bcyr.elements == t_list({"1", "t2", "t1"}, 2));
    CHECK(gram_matrix(p_space_basis(X, bases(X)), bcyr).is_identity());
    CHECK(dual_basis_oracle(X, bases(X)).elements == bcyr.elements);
}

TEST_CASE("(e1, e2, e3, a, b) spaces") {
    const VectorList X = fixtures::space5();
    const auto b = fixtures::space5_bprime();
    const SpaceBasis p = p_space_basis(X, b);
    const MPoly a = poly_s("s1 + 2*s2 + 3*s3", 3);
    CHECK(p.elements[0] == poly_s("1", 3));
    CHECK(p.elements[1] == poly_s("s3", 3));
    CHECK(p.elements[2] == poly_s("s3", 3) * a);
    CHECK(p.elements[3] == poly_s("s2", 3));
    CHECK(p.elements[4] == poly_s("s2", 3) * a);
    CHECK(p.elements[5] == poly_s("s1", 3));
    CHECK(p.elements[6] == poly_s("s1", 3) * a);

    const SpaceBasis d = d_space_basis(X, b);
    CHECK(same_span(d.elements, t_list({"1", "t1", "t2", "t3", "t1^2", "t2^2", "t3^2"}, 3), Side::T, 3));

    const SpaceBasis bcyr = bcyr_basis(X, b);
    CHECK(bcyr.elements == t_list({"1", "t3", "1/6*t3^2", "t2", "1/4*t2^2", "t1", "1/2*t1^2"}, 3));
    CHECK(gram_matrix(p, bcyr).is_identity());
    CHECK(dual_basis_oracle(X, b).elements == bcyr.elements);
}

TEST_CASE("the plane chain spaces") {
    {
        const VectorList X = fixtures::plane_chain(4);
        const auto b = fixtures::plane_chain_bprime(4);
        CHECK(d_space_basis(X, b).elements == t_list({"1", "t1", "t2", "t2^2"}, 2));
        CHECK(bcyr_basis(X, b).elements == t_list({"1", "t2", "1/2*t2^2", "t1"}, 2));
    }
    {
        const VectorList X = fixtures::plane_chain(5);
        const auto b = fixtures::plane_chain_bprime(5);
        CHECK(d_space_basis(X, b).elements == t_list({"1", "t1", "t2", "t2^2", "t2^3"}, 2));
        CHECK(bcyr_basis(X, b).elements == t_list({"1", "t2", "1/2*t2^2", "1/6*t2^3", "t1"}, 2));
        CHECK(gram_matrix(p_space_basis(X, b), bcyr_basis(X, b)).is_identity());
    }
}

TEST_CASE("singleton B' of the identity") {
    const VectorList I(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    const std::vector<BasisId> b{basis({1, 2, 3})};
    CHECK(p_space_basis(I, b).elements == std::vector<MPoly>{poly_s("1", 3)});
    CHECK(dual_basis_oracle(I, b).elements == std::vector<MPoly>{poly_t("1", 3)});
    CHECK(bcyr_basis(I, b).elements == std::vector<MPoly>{poly_t("1", 3)});
}

TEST_CASE("gram matrix entries between different degrees vanish") {
    const VectorList X = fixtures::space5();
    const auto b = fixtures::space5_bprime();
    const Matrix g = gram_matrix(p_space_basis(X, b), bcyr_basis(X, b));
    CHECK(g(0, 2) == 0);
    CHECK(g(2, 0) == 0);
    CHECK_THROWS_AS(gram_matrix(p_space_basis(X, b), p_space_basis(X, b)), ContractViolation);
}

TEST_CASE("power ideal kernels") {
    const VectorList Xp = fixtures::plane3();
    const PowerIdealResult r_plane = power_ideal_kernel(Xp, bases(Xp));
    CHECK(r_plane.equal);
    CHECK(same_span(r_plane.kernel.elements, {poly_s("1", 2), poly_s("s1", 2), poly_s("s2", 2)}, Side::S, 2));

    const PowerIdealResult r_space = power_ideal_kernel(fixtures::space5(), fixtures::space5_bprime());
    CHECK(r_space.equal);
    CHECK(r_space.spec.cap == 2);
    CHECK(r_space.kernel.hilbert == HilbertVector{1, 3, 3});

    // N = 4: P is spanned by 1, s1, s2, s2(s1+s2) and is closed under differentiation.
    const PowerIdealResult r4 = power_ideal_kernel(fixtures::plane_chain(4), fixtures::plane_chain_bprime(4));
    CHECK(r4.equal);
    CHECK(r4.kernel.hilbert == HilbertVector{1, 2, 1});
    const PowerIdealResult r5 = power_ideal_kernel(fixtures::plane_chain(5), fixtures::plane_chain_bprime(5));
    CHECK_FALSE(r5.equal);
    CHECK(r5.kernel.hilbert == HilbertVector{1, 2, 3, 1});
}

TEST_CASE("power ideal spec: exponents are kappa + 1") {
    const PowerIdealSpec spec = power_ideal_spec(fixtures::space5(), fixtures::space5_bprime());
    for (const PowerIdealGenerator& g : spec.generators) {
        CHECK(g.exponent >= 1);
        CHECK(g.annihilator.size() == 3 - rank_of(fixtures::space5(), g.flat));
    }
    // kappa is 1 on normals of planes containing a, 2 otherwise
    for (const PowerIdealGenerator& g : spec.generators)
        if (g.annihilator.size() == 1) {
            const bool contains_a = std::binary_search(g.flat.begin(), g.flat.end(), 3);
            CHECK(g.exponent == (contains_a ? 2u : 3u));
        }
}

TEST_CASE("Hilbert series equals the Tutte specialization") {
    const HilbertCheck h_plane = hilbert_tutte_check(fixtures::plane3(), bases(fixtures::plane3()));
    CHECK(h_plane.holds);
    CHECK(h_plane.tutte == HilbertVector{1, 2});
    const HilbertCheck h_space = hilbert_tutte_check(fixtures::space5(), fixtures::space5_bprime());
    CHECK(h_space.holds);
    CHECK(h_space.tutte == HilbertVector{1, 3, 3});
    // a forward-exchange singleton whose complement is externally active
    const HilbertCheck single = hilbert_tutte_check(fixtures::plane3(), {basis({1, 2})});
    CHECK(single.holds);
    CHECK(single.tutte == HilbertVector{1});
    // {(1,3)} is not forward-exchange: P and the Tutte side give q, D is only the constants
    const HilbertCheck broken = hilbert_tutte_check(fixtures::plane3(), {basis({1, 3})});
    CHECK(broken.tutte == HilbertVector{0, 1});
    CHECK(broken.p_space == HilbertVector{0, 1});
    CHECK(broken.d_space == HilbertVector{1});
    CHECK_FALSE(broken.holds);
}

TEST_CASE("deletion-contraction on the plane and space fixtures") {
    const DelconCheck d_plane = delcon_dimension_check(fixtures::plane3(), bases(fixtures::plane3()));
    CHECK(d_plane.element == 0);
    CHECK(d_plane.p_deletion == HilbertVector{1});
    CHECK(d_plane.p_contraction == HilbertVector{1, 1});
    CHECK(d_plane.holds());

    const DelconCheck d_space = delcon_dimension_check(fixtures::space5(), fixtures::space5_bprime());
    CHECK(d_space.holds());

    const VectorList coloops(2, {vec({1, 0}), vec({0, 1})});
    CHECK_THROWS_AS(delcon_dimension_check(coloops, bases(coloops)), ContractViolation);
}

TEST_CASE("local pieces match the truncated power") {
    const VectorList X = fixtures::plane3();
    for (const BasisId& b : bases(X)) CHECK(local_piece_check(X, b));
    const VectorList X_space = fixtures::space5();
    for (const BasisId& b : fixtures::space5_bprime()) {
        const Activities act = activity_sets(X_space, b);
        IndexSet keep;
        for (std::size_t i = 0; i < X_space.size(); ++i)
            if (!std::binary_search(act.external.begin(), act.external.end(), i)) keep.push_back(i);
        const Sublist z = restrict_list(X_space, keep, b);
        CHECK(local_piece_check(z.list, z.basis));
    }
    const VectorList I(2, {vec({1, 0}), vec({0, 1})});
    CHECK(local_piece_check(I, basis({1, 2})));
}

TEST_CASE("reorientation counts the flipped vectors") {
    const VectorList X(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({1, -1})});
    const Reorientation re = reorient(X, basis({1, 2}));
    CHECK(re.flipped == 2);
    CHECK(re.list[2] == vec({1, 0}));
    CHECK(re.list[3] == vec({-1, 1}));
}
