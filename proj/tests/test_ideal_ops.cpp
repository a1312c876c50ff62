#include "test_util.hpp"

using namespace chow;
using testutil::P;
using testutil::basis_strings;
using testutil::ideal_of;

TEST_CASE("colon ideals", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto I = ideal_of(r, {"x^2", "x y"});
    CHECK(same_ideal(colon(I, P(r, "x")), ideal_of(r, {"x", "y"})));
    CHECK(same_ideal(colon(I, ideal_of(r, {"x"})), ideal_of(r, {"x", "y"})));
    CHECK(same_ideal(colon(ideal_of(r, {"x"}), P(r, "y")), ideal_of(r, {"x"})));
    CHECK(same_ideal(colon(ideal_of(r, {"x^2"}), ideal_of(r, {"x", "y"})),
                     ideal_of(r, {"x^2"})));
    CHECK(same_ideal(colon(I, P(r, "1")), I));
    // Colon by a member is everything.
    CHECK(colon(I, P(r, "x^2")).is_unit());
}

TEST_CASE("saturation", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto I = ideal_of(r, {"x^2", "x y"});
    auto m = ideal_of(r, {"x", "y"});
    auto S = saturate(I, m);
    CHECK(same_ideal(S, ideal_of(r, {"x"})));
    CHECK(same_ideal(saturate(S, m), S));  // idempotent

    // The embedded point of <x^2, xy> sits at [0:0:1], not at the cone origin,
    // so saturating by the irrelevant ideal leaves the ideal untouched.
    CHECK(same_ideal(saturate(I, irrelevant_ideal(r)), I));

    // Saturating the double line by anything meeting it changes nothing: the
    // multiplicity-2 structure lives along the whole component.
    CHECK(same_ideal(saturate(ideal_of(r, {"x^2"}), ideal_of(r, {"x", "y"})),
                     ideal_of(r, {"x^2"})));

    // Embedded-point removal on the quartic pair: saturating by the ideal of
    // all Jacobian entries strips the scheme down to the underlying conic.
    auto E = ideal_of(r, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"});
    auto J = jacobian_minors_ideal(E, 1);
    CHECK(same_ideal(saturate(E, J), ideal_of(r, {"x^2 - y z"})));
    CHECK(basis_strings(saturate(E, J)) == std::vector<std::string>{"x^2 - y*z"});

    unsigned long before = work().saturations;
    (void)saturate(I, m);
    CHECK(work().saturations == before + 1);
}

TEST_CASE("colon and saturation containment chain", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto I = ideal_of(r, {"x^2 y", "x z^2"});
    Polynomial f = P(r, "x");
    auto C = colon(I, f);
    auto S = saturate(I, ideal_of(r, {"x"}));
    for (const auto& g : I.gens()) CHECK(C.contains(g));
    for (const auto& g : C.gens()) CHECK(S.contains(g));
    CHECK(same_ideal(S, ideal_of(r, {"y", "z^2"})));
}

TEST_CASE("intersection", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto A = ideal_of(r, {"x"});
    auto B = ideal_of(r, {"y"});
    auto cap = intersect(A, B);
    CHECK(same_ideal(cap, ideal_of(r, {"x y"})));
    CHECK(same_ideal(intersect(B, A), cap));

    // The intersection contains every pairwise product.
    auto C = ideal_of(r, {"x^2 - y z"});
    auto D = ideal_of(r, {"x", "y"});
    auto CD = intersect(C, D);
    for (const auto& f : C.gens())
        for (const auto& g : D.gens()) CHECK(CD.contains(f * g));

    // Conic times a fat-point structure, rebuilt from its pieces.
    auto E = ideal_of(r, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"});
    auto built = intersect(ideal_of(r, {"x^2 - y*z"}), ideal_of(r, {"y^2", "x^4 - x^2*y*z"}));
    CHECK(same_ideal(built, E));

    unsigned long before = work().intersections;
    (void)intersect(A, B);
    CHECK(work().intersections == before + 1);

    auto r2 = make_ring({"x", "y"});
    CHECK_THROWS_AS(intersect(A, ideal_of(r2, {"x"})), std::invalid_argument);
}

TEST_CASE("ideal equality", "[ideal_ops]") {
    auto r = make_ring({"x", "y"});
    CHECK(same_ideal(ideal_of(r, {"x", "y"}), ideal_of(r, {"y", "x + y"})));
    CHECK(same_ideal(ideal_of(r, {"2x"}), ideal_of(r, {"x"})));
    CHECK_FALSE(same_ideal(ideal_of(r, {"x"}), ideal_of(r, {"x^2"})));
    CHECK(same_ideal(IdealHandle::zero(r), IdealHandle::zero(r)));
}

TEST_CASE("generator degree equalization", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto src = GenericScalarSource::seeded(19);
    auto I = ideal_of(r, {"x"});
    auto E = equalize_generator_degrees(I, 2, src);
    REQUIRE(E.gens().size() == 3);
    for (const auto& g : E.gens()) {
        CHECK(g.degree() == 2);
        CHECK(g.is_homogeneous());
        CHECK(I.contains(g));
    }
    // Same scheme away from the irrelevant locus.
    CHECK(same_ideal(saturate(E, irrelevant_ideal(r)), I));

    // Generators already at the target degree pass through untouched.
    auto J = ideal_of(r, {"x^2 - y z"});
    CHECK(same_ideal(equalize_generator_degrees(J, 2, src), J));
    CHECK_THROWS_AS(equalize_generator_degrees(J, 1, src), std::invalid_argument);

    // Mixed degrees: the projective-degree tuple is blind to the rewriting.
    auto M = ideal_of(r, {"x", "y^2"});
    auto amb = IdealHandle::zero(r);
    auto s1 = src.fork("pd1");
    auto s2 = src.fork("pd2");
    auto pd1 = projective_degrees(M, amb, s1, 2);
    auto pd2 = projective_degrees(equalize_generator_degrees(M, 2, src), amb, s2, 2);
    CHECK(pd1 == pd2);
}

TEST_CASE("scheme degree", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    auto src = GenericScalarSource::seeded(23);
    CHECK(scheme_degree(ideal_of(r, {"x^2 - y z"}), src) == 2);
    CHECK(scheme_degree(ideal_of(r, {"x^2", "x y"}), src) == 1);
    CHECK(scheme_degree(ideal_of(r, {"x", "y"}), src) == 1);
    CHECK(scheme_degree(ideal_of(r, {"x y", "z"}), src) == 2);
    auto r4 = make_ring({"x", "y", "z", "w"});
    CHECK(scheme_degree(ideal_of(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}), src) == 3);
}

TEST_CASE("distinguished ideals", "[ideal_ops]") {
    auto r = make_ring({"x", "y", "z"});
    CHECK(unit_ideal(r).is_unit());
    auto m = irrelevant_ideal(r);
    REQUIRE(m.gens().size() == 3);
    CHECK(m.gens()[0] == P(r, "x"));
    CHECK(m.gens()[2] == P(r, "z"));

    auto ext = extend_ring(r, {"t"});
    auto m2 = irrelevant_ideal(ext);
    CHECK(m2.gens().size() == 3);  // auxiliary variables are not geometric
}
