#include "test_util.hpp"

using namespace chow;
using testutil::P;
using testutil::ideal_of;

TEST_CASE("equidimensional decomposition", "[components]") {
    auto r = make_ring({"x", "y", "z"});

    // Plane union line: two pieces, descending dimension, primes recovered.
    auto dec = equidimensional_decomposition(ideal_of(r, {"x z", "y z"}));
    REQUIRE(dec.pieces.size() == 2);
    CHECK(dec.top_dim() == 2);
    CHECK(dec.pieces[0].dim == 2);
    CHECK(dec.pieces[1].dim == 1);
    CHECK(same_ideal(dec.pieces[0].ideal, ideal_of(r, {"z"})));
    CHECK(same_ideal(dec.pieces[1].ideal, ideal_of(r, {"x", "y"})));
    REQUIRE(dec.piece_of_dim(1) != nullptr);
    CHECK(same_ideal(*dec.piece_of_dim(1), ideal_of(r, {"x", "y"})));
    CHECK(dec.piece_of_dim(0) == nullptr);

    // Nonreduced structure along a whole component survives.
    auto dec2 = equidimensional_decomposition(ideal_of(r, {"x^2"}));
    REQUIRE(dec2.pieces.size() == 1);
    CHECK(dec2.pieces[0].dim == 2);
    CHECK(same_ideal(dec2.pieces[0].ideal, ideal_of(r, {"x^2"})));

    // Embedded structure is not an isolated piece: the hull of the plane
    // swallows the multiplicity concentrated on the embedded line.
    auto dec3 = equidimensional_decomposition(ideal_of(r, {"x^2", "x y"}));
    REQUIRE(dec3.pieces.size() == 1);
    CHECK(dec3.pieces[0].dim == 2);
    CHECK(same_ideal(dec3.pieces[0].ideal, ideal_of(r, {"x"})));

    CHECK(equidimensional_decomposition(ideal_of(r, {"x", "x - 1"})).pieces.empty());

    // The intersection of the pieces cuts the same set as the input: each
    // piece contains I (so V(meet) is inside V(I)), and saturating I by the
    // meet leaves nothing (so no component of V(I) was dropped).
    auto I = ideal_of(r, {"x z", "y z", "x^2 y"});
    auto dec4 = equidimensional_decomposition(I);
    REQUIRE(!dec4.pieces.empty());
    IdealHandle meet = dec4.pieces.front().ideal;
    for (std::size_t k = 1; k < dec4.pieces.size(); ++k)
        meet = intersect(meet, dec4.pieces[k].ideal);
    for (const auto& p : dec4.pieces)
        for (const auto& g : I.gens()) CHECK(p.ideal.contains(g));
    CHECK(saturate(I, meet).is_unit());
    CHECK(krull_dimension(meet) == krull_dimension(I));
}

TEST_CASE("zero-dimensional radical test and radical", "[components]") {
    auto r = make_ring({"x", "y"});
    CHECK(is_radical_zero_dim(ideal_of(r, {"x", "y"})));
    CHECK(is_radical_zero_dim(ideal_of(r, {"x^2 - 2", "y - x"})));
    CHECK(is_radical_zero_dim(ideal_of(r, {"x^2 - 1", "y^2 - 1"})));
    CHECK_FALSE(is_radical_zero_dim(ideal_of(r, {"x^2", "y"})));
    CHECK_FALSE(is_radical_zero_dim(ideal_of(r, {"x^2", "x y", "y^2"})));

    auto R1 = radical_zero_dim(ideal_of(r, {"x^2", "y"}));
    CHECK(same_ideal(R1, ideal_of(r, {"x", "y"})));
    auto R2 = radical_zero_dim(ideal_of(r, {"x^3 - x^2", "y^2"}));
    CHECK(same_ideal(R2, ideal_of(r, {"x^2 - x", "y"})));
    auto R3 = radical_zero_dim(ideal_of(r, {"x^2 - 2", "y - x"}));
    CHECK(same_ideal(R3, ideal_of(r, {"x^2 - 2", "y - x"})));
    CHECK(is_radical_zero_dim(R1));
    CHECK(is_radical_zero_dim(R2));
}

TEST_CASE("quotient basis and minimal polynomials", "[components]") {
    auto r = make_ring({"x", "y"});
    auto I = ideal_of(r, {"x^2 - 2", "y - x"});
    QuotientBasis Q = make_quotient_basis(I);
    CHECK(Q.dim() == 2);
    UniPoly m = minimal_polynomial(Q, P(r, "x"));
    CHECK(m == UniPoly{Rat(-2), Rat(0), Rat(1)});
    UniPoly c = minimal_polynomial(Q, P(r, "x + 1"));
    CHECK(uni_eval(c, Rat(0)) != 0);  // roots moved off the old ones
    CHECK(uni_deg(c) == 2);

    // A non-separating form only sees its own minimal polynomial.
    auto J = ideal_of(r, {"x^2 - 1", "y^2 - 1"});
    QuotientBasis QJ = make_quotient_basis(J);
    CHECK(QJ.dim() == 4);
    CHECK(uni_deg(minimal_polynomial(QJ, P(r, "x"))) == 2);

    CHECK_THROWS_AS(make_quotient_basis(ideal_of(r, {"x"})), std::invalid_argument);
}

TEST_CASE("univariate point representations", "[components]") {
    auto r = make_ring({"x", "y"});
    auto src = GenericScalarSource::seeded(3);

    auto one = rur_construct(ideal_of(r, {"x - 1", "y - 2"}), src);
    CHECK(one.point_count() == 1);
    REQUIRE(one.A.size() == 2);
    // Single point: A_i / R' evaluated at the root recovers the coordinates.
    Rat root = -one.R[0];
    CHECK(uni_eval(one.A[0], root) / uni_eval(one.Rprime, root) == Rat(1));
    CHECK(uni_eval(one.A[1], root) / uni_eval(one.Rprime, root) == Rat(2));

    auto I = ideal_of(r, {"x^2 - 2", "y - x"});
    auto two = rur_construct(I, src);
    CHECK(two.point_count() == 2);
    CHECK(vanishes_on_cluster(I, two));
    CHECK(uni_deg(uni_gcd(two.R, two.Rprime)) == 0);  // squarefree
    for (const auto& a : two.A) CHECK(uni_deg(a) < uni_deg(two.R));

    auto four = rur_construct(ideal_of(r, {"x^2 - 2", "y^2 - 2"}), src);
    CHECK(four.point_count() == 4);
    CHECK(vanishes_on_cluster(ideal_of(r, {"x^2 - 2", "y^2 - 2"}), four));

    CHECK_THROWS_AS(rur_construct(ideal_of(r, {"x", "x - 1"}), src), std::invalid_argument);
    CHECK_THROWS_AS(rur_construct(ideal_of(r, {"x^2", "y"}), src), consistency_error);
}

TEST_CASE("cluster splitting", "[components]") {
    auto r = make_ring({"x", "y"});
    auto src = GenericScalarSource::seeded(3);

    // (x-1)(x+1): splits into two rational one-point clusters.
    auto I = ideal_of(r, {"x^2 - 1", "y - x"});
    auto rur = rur_construct(I, src);
    auto parts = split_rur(rur);
    REQUIRE(parts.size() == 2);
    for (const auto& p : parts) {
        CHECK(p.point_count() == 1);
        CHECK(vanishes_on_cluster(I, p));
        CHECK(p.dimension_tag == rur.dimension_tag);
    }

    // Irreducible minimal polynomial: nothing to split.
    auto J = ideal_of(r, {"x^2 - 2", "y - x"});
    auto rur2 = rur_construct(J, src);
    CHECK(split_rur(rur2).size() == 1);

    // Mixed: one rational point and one conjugate pair.
    auto K = ideal_of(r, {"x^3 - 2x^2 - x + 2", "y - 1"});  // roots 1, -1, 2
    auto rur3 = rur_construct(K, src);
    CHECK(rur3.point_count() == 3);
    CHECK(split_rur(rur3).size() == 3);
}

TEST_CASE("component point sampling", "[components]") {
    auto r = make_ring({"x", "y", "z"});
    auto src = GenericScalarSource::seeded(17);

    // A plane in affine 3-space: every cluster is tagged with dimension 2.
    auto chart = ideal_of(r, {"x"});
    auto pts = sample_component_points(chart, src);
    REQUIRE(!pts.empty());
    for (const auto& c : pts) {
        CHECK(c.dimension_tag == 2);
        CHECK(vanishes_on_cluster(chart, c));
    }

    // Plane union line: both dimensions appear, every cluster on the scheme.
    auto mixed = ideal_of(r, {"x z", "y z"});
    auto src2 = GenericScalarSource::seeded(29);
    auto pts2 = sample_component_points(mixed, src2);
    bool saw1 = false, saw2 = false;
    for (const auto& c : pts2) {
        CHECK((c.dimension_tag == 1 || c.dimension_tag == 2));
        saw1 = saw1 || c.dimension_tag == 1;
        saw2 = saw2 || c.dimension_tag == 2;
        CHECK(vanishes_on_cluster(mixed, c));
    }
    CHECK(saw1);
    CHECK(saw2);

    CHECK(sample_component_points(ideal_of(r, {"x", "x - 1"}), src).empty());
}

TEST_CASE("aggregate reducedness at sampled clusters", "[components]") {
    auto r = make_ring({"x", "y", "z"});

    // Reduced plane: sigma equals the point count.
    {
        auto chart = ideal_of(r, {"x"});
        auto src = GenericScalarSource::seeded(31);
        auto dec = equidimensional_decomposition(chart);
        auto pts = sample_component_points(chart, src, &dec);
        REQUIRE(!pts.empty());
        auto check_src = src.fork("check");
        CHECK(aggregate_reducedness_test(pts.front(), chart, 2, dec, check_src));
    }

    // Double plane: every point counts twice.
    {
        auto chart = ideal_of(r, {"x^2"});
        auto src = GenericScalarSource::seeded(37);
        auto dec = equidimensional_decomposition(chart);
        auto pts = sample_component_points(chart, src, &dec);
        REQUIRE(!pts.empty());
        auto check_src = src.fork("check");
        CHECK_FALSE(aggregate_reducedness_test(pts.front(), chart, 2, dec, check_src));
        auto sigma_src = src.fork("sigma");
        long sigma = affine_segre_dim0(pts.front(), chart, 2, dec, sigma_src);
        CHECK(sigma == 2 * (long)pts.front().point_count());
    }
}

TEST_CASE("dimension-0 slice counts respect the component filter", "[components]") {
    auto r = make_ring({"x", "y", "z"});
    // Plane union line: a cluster on the line contributes nothing in the
    // plane's dimension, and counts once in its own.
    auto chart = ideal_of(r, {"x z", "y z"});
    auto src = GenericScalarSource::seeded(41);
    auto dec = equidimensional_decomposition(chart);
    auto pts = sample_component_points(chart, src, &dec);
    const RURPoints* line_cluster = nullptr;
    for (const auto& c : pts)
        if (c.dimension_tag == 1) line_cluster = &c;
    REQUIRE(line_cluster != nullptr);
    auto s1 = src.fork("line-in-plane");
    CHECK(affine_segre_dim0(*line_cluster, chart, 2, dec, s1) == 0);
    auto s2 = src.fork("line-in-line");
    CHECK(affine_segre_dim0(*line_cluster, chart, 1, dec, s2) ==
          (long)line_cluster->point_count());

    auto r2 = make_ring({"x", "y"});
    auto wrong = rur_construct(ideal_of(r2, {"x", "y"}), src);
    CHECK_THROWS_AS(affine_segre_dim0(wrong, chart, 1, dec, src), std::invalid_argument);
}
