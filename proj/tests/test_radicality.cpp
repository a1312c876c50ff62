#include "test_util.hpp"

using namespace chow;
using testutil::P;
using testutil::ideal_of;

TEST_CASE("nonreduced components are caught at stage 1", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto rep = is_radical(ideal_of(r, {"x^2"}));
    CHECK_FALSE(rep.verdict);
    CHECK(rep.stage == "isolated-nonreduced");
    REQUIRE(rep.witness.present);
    CHECK(rep.witness.nu == 1);
    CHECK(rep.witness.sigma == 2 * rep.witness.expected);
    CHECK(rep.witness.expected == (long)rep.witness.rur.point_count());
    CHECK(rep.deg_table.at(1) == 2);
    CHECK(rep.projective_dimension == 1);
    // The witness cluster really lies on the double line: x vanishes there.
    CHECK(uni_deg(evaluate_mod_univariate(P(r, "x"), rep.witness.rur)) < 0);

    auto rep3 = is_radical(ideal_of(r, {"x^3"}));
    CHECK_FALSE(rep3.verdict);
    CHECK(rep3.stage == "isolated-nonreduced");
    CHECK(rep3.witness.sigma == 3 * rep3.witness.expected);

    auto fat = is_radical(ideal_of(r, {"x^2", "x y", "y^2"}));
    CHECK_FALSE(fat.verdict);
    CHECK(fat.stage == "isolated-nonreduced");
    CHECK(fat.witness.nu == 0);
    CHECK(fat.witness.sigma == 3);
    CHECK(fat.witness.expected == 1);
    CHECK(fat.deg_table.at(0) == 3);
}

TEST_CASE("embedded points off the singular locus are caught at stage 2", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto rep = is_radical(ideal_of(r, {"x^2", "x y"}));
    CHECK_FALSE(rep.verdict);
    CHECK(rep.stage == "embedded-outside-singular");
    REQUIRE(rep.witness.present);
    CHECK(rep.witness.sigma == rep.witness.expected);
    // The witness sits at [0:0:1], the embedded point.
    CHECK(uni_deg(evaluate_mod_univariate(P(r, "x"), rep.witness.rur)) < 0);
    CHECK(uni_deg(evaluate_mod_univariate(P(r, "y"), rep.witness.rur)) < 0);
    CHECK(rep.deg_table.at(1) == 1);
    CHECK(rep.deg_table.at(0) == 0);

    auto quartics = is_radical(ideal_of(r, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"}));
    CHECK_FALSE(quartics.verdict);
    CHECK(quartics.stage == "embedded-outside-singular");
    REQUIRE(quartics.witness.present);
    CHECK(uni_deg(evaluate_mod_univariate(P(r, "x"), quartics.witness.rur)) < 0);
    CHECK(uni_deg(evaluate_mod_univariate(P(r, "y"), quartics.witness.rur)) < 0);
}

TEST_CASE("embedded points inside the singular locus need stage 3", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    // Nodal cubic with extra structure hidden at the node.
    auto I = ideal_of(r, {"x^3*y + x^2*y*z - y^3*z", "x^4 + x^3*z - x*y^2*z"});
    auto rep = is_radical(I);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.stage == "segre-mismatch");
    CHECK_FALSE(rep.witness.present);
    REQUIRE(rep.has_segre);
    CHECK_FALSE(rep.segre.equal);
    CHECK(rep.segre.class_A.to_string() == "3H - 9H^2");  // saturated: the bare cubic
    CHECK(rep.segre.class_B.to_string() == "3H - 8H^2");  // original carries the node structure

    // Stages 1 and 2 pass on their own for the same ideal.
    CHECK(run_stage1(I).stage == "stage1-pass");
    CHECK(run_stage2(I).stage == "stage2-pass");
}

TEST_CASE("radical ideals pass all three stages", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto conic = is_radical(ideal_of(r, {"x^2 - y z"}));
    CHECK(conic.verdict);
    CHECK(conic.stage == "radical");
    CHECK(conic.same_ideal_shortcut);
    CHECK_FALSE(conic.has_segre);
    CHECK_FALSE(conic.witness.present);
    CHECK(conic.deg_table.at(1) == 2);

    auto r4 = make_ring({"x", "y", "z", "w"});
    auto planeline = is_radical(ideal_of(r4, {"x z", "y z"}));
    CHECK(planeline.verdict);
    CHECK(planeline.stage == "radical");
    CHECK(planeline.deg_table.at(2) == 1);
    CHECK(planeline.deg_table.at(1) == 1);
    CHECK(planeline.projective_dimension == 2);

    auto nodal = is_radical(ideal_of(r, {"y^2*z - x^3 - x^2*z"}));
    CHECK(nodal.verdict);
    CHECK(nodal.stage == "radical");

    auto twisted = is_radical(ideal_of(r4, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
    CHECK(twisted.verdict);
    CHECK(twisted.stage == "radical");
    CHECK(twisted.deg_table.at(1) == 3);
}

TEST_CASE("saturation is invoked exactly once, in stage 3", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto rep = is_radical(ideal_of(r, {"x^2 - y z"}));
    REQUIRE(rep.stages.size() == 4);
    CHECK(rep.stages[0].work.saturations == 0);
    CHECK(rep.stages[1].work.saturations == 0);
    CHECK(rep.stages[2].work.saturations == 0);
    CHECK(rep.stages[3].work.saturations == 1);
    // Wall times stay unset unless requested.
    for (const auto& s : rep.stages) CHECK(s.wall_ms < 0);

    RadicalityOptions opt;
    opt.wall_times = true;
    auto timed = is_radical(ideal_of(r, {"x^2 - y z"}), opt);
    for (const auto& s : timed.stages) CHECK(s.wall_ms >= 0);
}

TEST_CASE("degenerate inputs", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto zero = is_radical(IdealHandle::zero(r));
    CHECK(zero.verdict);
    CHECK(zero.stage == "radical");
    CHECK(zero.note.find("zero ideal") != std::string::npos);

    auto irr = is_radical(ideal_of(r, {"x", "y", "z"}));
    CHECK(irr.verdict);
    CHECK(irr.stage == "radical");
    CHECK(irr.note.find("empty scheme") != std::string::npos);

    // Irrelevant-supported but nonreduced: still radical up to saturation.
    auto irr2 = is_radical(ideal_of(r, {"x^2", "x y", "y^2", "z"}));
    CHECK(irr2.verdict);
    CHECK(irr2.note.find("empty scheme") != std::string::npos);

    CHECK_THROWS_AS(is_radical(ideal_of(r, {"x^2 - y"})), std::invalid_argument);
}

TEST_CASE("stage entry points", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    auto s1 = run_stage1(ideal_of(r, {"x"}));
    CHECK(s1.verdict);
    CHECK(s1.stage == "stage1-pass");

    // Stage 1 alone already rejects a nonreduced component.
    auto s1bad = run_stage1(ideal_of(r, {"x^2"}));
    CHECK_FALSE(s1bad.verdict);
    CHECK(s1bad.stage == "isolated-nonreduced");

    auto s2 = run_stage2(ideal_of(r, {"x^2", "x y"}));
    CHECK_FALSE(s2.verdict);
    CHECK(s2.stage == "embedded-outside-singular");

    auto s3 = run_stage3(ideal_of(r, {"x^2 - y z"}));
    CHECK(s3.verdict);
    CHECK(s3.stage == "radical");
}

TEST_CASE("reports are deterministic", "[radical]") {
    auto r = make_ring({"x", "y", "z"});
    RadicalityOptions opt;
    opt.seed = 1337;
    auto a = is_radical(ideal_of(r, {"x^2", "x y"}), opt);
    auto b = is_radical(ideal_of(r, {"x^2", "x y"}), opt);
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
    CHECK(a.seed == 1337);

    RadicalityOptions other;
    other.seed = 42;
    auto c = is_radical(ideal_of(r, {"x^2", "x y"}), other);
    CHECK(c.verdict == a.verdict);
    CHECK(c.stage == a.stage);
}
