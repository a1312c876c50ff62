#include "test_util.hpp"

using namespace chow;
using testutil::P;
using testutil::basis_strings;
using testutil::ideal_of;

namespace {

// Standard-monomial count straight from a basis computed under `ord`, written
// out independently of the library's grevlex-only helper so the two orders
// cross-check each other.
long count_standard(const IdealHandle& I, const MonomialOrder& ord) {
    auto gb = groebner_basis(I.gens(), ord);
    std::size_t n = I.ring()->size();
    std::vector<Monomial> lms;
    for (const auto& g : gb) {
        Monomial best;
        bool first = true;
        for (const auto& [m, c] : g.terms())
            if (first || ord.less(best, m)) {
                best = m;
                first = false;
            }
        lms.push_back(best);
    }
    std::vector<unsigned> cap(n, 0);
    for (const auto& m : lms)
        for (std::size_t i = 0; i < n; ++i) {
            bool pure = m[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m[j]) pure = false;
            if (pure && (!cap[i] || m[i] < cap[i])) cap[i] = m[i];
        }
    long count = 0;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (unsigned e = 0; e < cap[v]; ++e) {
            cur[v] = e;
            bool div = false;
            for (const auto& m : lms)
                if (mono_divides(m, cur)) div = true;
            if (div) break;
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    return count;
}

std::vector<Monomial> lms_under(const IdealHandle& I, const MonomialOrder& ord) {
    std::vector<Monomial> lms;
    for (const auto& g : groebner_basis(I.gens(), ord)) {
        Monomial best;
        bool first = true;
        for (const auto& [m, c] : g.terms())
            if (first || ord.less(best, m)) {
                best = m;
                first = false;
            }
        lms.push_back(best);
    }
    return lms;
}

}  // namespace

TEST_CASE("reduced basis shapes", "[groebner]") {
    auto r = make_ring({"x", "y"});
    auto I = ideal_of(r, {"x", "x^2"});
    CHECK(basis_strings(I) == std::vector<std::string>{"x"});
    CHECK(basis_strings(ideal_of(r, {"2x"})) == std::vector<std::string>{"x"});
    CHECK(basis_strings(ideal_of(r, {"x - 1", "x"})) == std::vector<std::string>{"1"});
    CHECK(ideal_of(r, {"x - 1", "x"}).is_unit());
    CHECK(IdealHandle::zero(r).groebner().empty());
    CHECK(IdealHandle::zero(r).is_zero_ideal());

    // The basis is interreduced: no leading monomial divides another.
    auto J = ideal_of(r, {"x^2 - y", "y^2 - x"});
    auto lms = J.leading_monomials();
    for (std::size_t i = 0; i < lms.size(); ++i)
        for (std::size_t j = 0; j < lms.size(); ++j)
            if (i != j) CHECK_FALSE(mono_divides(lms[i], lms[j]));
}

TEST_CASE("membership via normal form", "[groebner]") {
    auto r = make_ring({"x", "y"});
    auto I = ideal_of(r, {"x^2 - y", "y^2 - x"});
    CHECK(I.contains(P(r, "x^4 - x")));
    CHECK(I.contains(P(r, "x^2 - y")));
    CHECK_FALSE(I.contains(P(r, "x")));
    CHECK_FALSE(I.contains(P(r, "x^2 + y")));
    CHECK(I.normal_form(P(r, "x^2")) == P(r, "y"));
    CHECK(I.normal_form(Polynomial::zero(r)).is_zero());

    // Normal forms are idempotent.
    Polynomial nf = I.normal_form(P(r, "x^3 + y^3 + 1"));
    CHECK(I.normal_form(nf) == nf);

    auto r3 = make_ring({"x", "y", "z"});
    auto E = ideal_of(r3, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"});
    CHECK_FALSE(E.contains(P(r3, "x^2 - y z")));
    CHECK(E.contains(P(r3, "y^4*z - x^2*y^3")));
}

TEST_CASE("dimension and quotient size", "[groebner]") {
    auto r3 = make_ring({"x", "y", "z"});
    CHECK(krull_dimension(ideal_of(r3, {"x^2"})) == 2);
    CHECK(krull_dimension(IdealHandle::zero(r3)) == 3);
    CHECK(krull_dimension(ideal_of(r3, {"x", "x - 1"})) == -1);
    CHECK(krull_dimension(ideal_of(r3, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"})) == 2);
    CHECK(krull_dimension(ideal_of(r3, {"x", "y", "z"})) == 0);
    CHECK(is_zero_dimensional(ideal_of(r3, {"x", "y", "z"})));

    auto r = make_ring({"x", "y"});
    auto I = ideal_of(r, {"x^2 - y", "y^2 - x"});
    CHECK(quotient_vs_dimension(I) == 4);
    CHECK(quotient_vs_dimension(ideal_of(r, {"x^2", "x y", "y^2"})) == 3);
    CHECK(quotient_vs_dimension(ideal_of(r, {"x", "x - 1"})) == 0);
    CHECK_THROWS_AS(quotient_vs_dimension(ideal_of(r, {"x^2"})), dimension_error);
    CHECK_THROWS_AS(standard_monomials(ideal_of(r, {"x"})), dimension_error);

    auto sm = standard_monomials(ideal_of(r, {"x^2", "y"}));
    REQUIRE(sm.size() == 2);
    CHECK(sm[0] == Monomial{0, 0});
    CHECK(sm[1] == Monomial{1, 0});

    auto mask = independent_set_mask(ideal_of(r3, {"x^2"}));
    REQUIRE(mask.size() == 3);
    CHECK(mask[0] == 0);  // x is bound by the leading power x^2
    CHECK((long)std::count(mask.begin(), mask.end(), 1) == 2);
}

TEST_CASE("elimination", "[groebner]") {
    auto r = make_ring({"x", "y", "t"});
    auto I = ideal_of(r, {"x - t", "y - t^2"});
    auto E = eliminate(I, {0, 0, 1});
    REQUIRE(E.gens().size() == 1);
    CHECK(E.gens()[0] == P(r, "x^2 - y"));

    // Inconsistent after elimination: 1 - t x and x both present.
    auto U = eliminate(ideal_of(r, {"1 - t x", "x"}), {0, 0, 1});
    CHECK(U.is_unit());

    // Nothing to keep: every generator touches the eliminated variable.
    auto N = eliminate(ideal_of(r, {"t - x"}), {0, 0, 1});
    CHECK(N.is_zero_ideal());

    CHECK_THROWS_AS(eliminate(I, {1, 0}), std::invalid_argument);
}

TEST_CASE("order independence of invariants", "[groebner]") {
    auto r = make_ring({"x", "y"});
    auto I = ideal_of(r, {"x^2 - y", "y^2 - x"});
    CHECK(count_standard(I, grevlex_order()) == 4);
    CHECK(count_standard(I, lex_order()) == 4);
    auto J = ideal_of(r, {"x^2 - 2", "y - x"});
    CHECK(count_standard(J, grevlex_order()) == 2);
    CHECK(count_standard(J, lex_order()) == 2);

    auto r3 = make_ring({"x", "y", "z"});
    auto E = ideal_of(r3, {"-x^2*y^2 + y^3*z", "-x^4 + x^2*y*z"});
    CHECK((long)chow::detail::max_independent_set(lms_under(E, lex_order()), 3) ==
          krull_dimension(E));
    auto C = ideal_of(r3, {"x^2 - y z"});
    CHECK((long)chow::detail::max_independent_set(lms_under(C, lex_order()), 3) ==
          krull_dimension(C));
}

TEST_CASE("work counters and budget", "[groebner]") {
    auto r = make_ring({"x", "y"});
    unsigned long before = work().groebner_calls;
    auto I = ideal_of(r, {"x^2 - y", "y^2 - x"});
    (void)I.groebner();
    CHECK(work().groebner_calls == before + 1);
    (void)I.groebner();  // cached: no recount
    CHECK(work().groebner_calls == before + 1);
    CHECK(budget_used() > 0);

    {
        BudgetScope scope(2);
        std::vector<Polynomial> gens = {P(r, "x^2 - y"), P(r, "y^2 - x")};
        CHECK_THROWS_AS(groebner_basis(gens, grevlex_order()), budget_error);
    }
    // The scope restored the outer accounting, so this no longer throws.
    std::vector<Polynomial> gens = {P(r, "x^2 - y"), P(r, "y^2 - x")};
    CHECK(groebner_basis(gens, grevlex_order()).size() >= 2);
}
