#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permv/vnum.hpp"

using namespace permv;

namespace {

Polynomial P(const std::string& text, const RingPtr& r) {
    return parse_polynomial(text, r, MonomialOrder::lex(r->nvars()));
}

Ideal vars(const RingPtr& r, std::vector<std::string> names) {
    std::vector<Polynomial> gens;
    for (const auto& n : names) gens.push_back(P(n, r));
    return Ideal(r, std::move(gens));
}

} // namespace

TEST_CASE("alpha of (I : x_11)/I for the generic 2x3 shape is exactly 2") {
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    MonomialOrder order = shape_order(shape);
    AlphaResult a = alpha_quotient(I, vars(I.ring(), {"x_1_1"}), 4, order);
    REQUIRE(a.value.has_value());
    CHECK(*a.value == 2);
    CHECK(a.cap == 4);
    // dims are recorded per degree up to the hit
    REQUIRE(a.dims.size() == 3);
    CHECK(a.dims[0].degree == 0);
    CHECK(a.dims[2].solution_dim > a.dims[2].ideal_dim);
    // the element is a genuine witness: f*x_11 in I, f not in I
    REQUIRE(a.element.has_value());
    CHECK(a.element->degree() == 2);
    CHECK(member(*a.element * P("x_1_1", I.ring()), I, order));
    CHECK_FALSE(member(*a.element, I, order));
}

TEST_CASE("alpha degenerate cases") {
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    MonomialOrder order = shape_order(shape);
    const RingPtr& r = I.ring();

    // J = (1): (I : J)/I = 0, so no value up to the cap
    Ideal unit(r, {P("1", r)});
    AlphaResult none = alpha_quotient(I, unit, 3, order);
    CHECK_FALSE(none.value.has_value());
    CHECK(none.dims.size() == 4);

    // J = I: (I : I) is the whole ring, so alpha = 0 (constants)
    AlphaResult zero = alpha_quotient(I, I, 3, order);
    REQUIRE(zero.value.has_value());
    CHECK(*zero.value == 0);

    CHECK_THROWS_AS(alpha_quotient(I, Ideal(r), 3, order), domain_error);
    Ideal inhomogeneous(r, {P("x_1_1 + 1", r)});
    CHECK_THROWS_AS(alpha_quotient(inhomogeneous, unit, 3, order), domain_error);
}

TEST_CASE("alpha respects colon monotonicity (Lemma 2.2)") {
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    MonomialOrder order = shape_order(shape);
    const int cap = 4;
    auto alpha = [&](const Ideal& J) {
        AlphaResult a = alpha_quotient(I, J, cap, order);
        return a.value ? *a.value : cap + 1;
    };
    // J1 subset J2 subset J3 gives (I:J3) subset (I:J2) subset (I:J1),
    // hence weakly increasing alphas
    Ideal J1 = vars(I.ring(), {"x_1_1"});
    Ideal J2 = vars(I.ring(), {"x_1_1", "x_2_2"});
    Ideal J3 = vars(I.ring(), {"x_1_1", "x_2_2", "x_1_2"});
    CHECK(alpha(J1) <= alpha(J2));
    CHECK(alpha(J2) <= alpha(J3));
}

TEST_CASE("v lower bound minimizes alpha over the prime list") {
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    KnownPrimeSet d = known_data(shape);
    CHECK(v_lower_bound(I, d, 4, shape_order(shape)) == 2);

    ShapeSpec h23 = ShapeSpec::parse("hankel:2x3");
    CHECK(v_lower_bound(permanental_ideal(h23), known_data(h23), 4, shape_order(h23)) == 3);
}

TEST_CASE("witness verification") {
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    std::vector<Witness> ws = paper_witnesses(shape);
    REQUIRE(ws.size() == 1);
    CHECK(verify_witness(I, ws[0]));

    // tampering with the expected colon must be caught
    Witness bad = ws[0];
    bad.expected_colon = vars(I.ring(), {"x_1_1"});
    CHECK_FALSE(verify_witness(I, bad));

    Witness malformed = ws[0];
    malformed.degree = 5;
    CHECK_THROWS_AS(verify_witness(I, malformed), domain_error);
}

TEST_CASE("non-primality certificates") {
    ShapeSpec g23 = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(g23);
    CHECK(certify_not_prime(I, P("x_1_1*x_2_2", I.ring())));

    // P_2 of the generic 2x2 is prime: no probe can separate it
    ShapeSpec g22 = ShapeSpec::parse("generic:2x2");
    Ideal J = permanental_ideal(g22);
    CHECK_FALSE(certify_not_prime(J, P("x_1_1*x_2_2", J.ring())));
    CHECK_FALSE(certify_not_prime(J, P("x_1_1", J.ring())));

    // the probe must lie outside the ideal
    CHECK_THROWS_AS(
        certify_not_prime(I, P("x_1_1*x_2_2 + x_1_2*x_2_1", I.ring())), domain_error);
}

TEST_CASE("v-number pipeline on exact cases") {
    struct Row {
        const char* shape;
        int v;
    };
    for (Row row : {Row{"generic:2x3", 2}, Row{"generic:3x3", 3}, Row{"symmetric:3", 3},
                    Row{"hankel:2x3", 3}, Row{"hankel:3x4", 2}, Row{"hankel:3x6", 1}}) {
        VNumberReport rep = v_number(ShapeSpec::parse(row.shape));
        CHECK(rep.status == VStatus::exact);
        CHECK(rep.lower == row.v);
        CHECK(rep.upper == row.v);
        CHECK(rep.value() == row.v);
        CHECK(rep.witness_verified);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->degree == row.v);
    }
}

TEST_CASE("v-number pipeline on prime shapes") {
    VNumberReport rep = v_number(ShapeSpec::parse("generic:2x2"));
    CHECK(rep.status == VStatus::prime_lookup);
    CHECK(rep.value() == 0);
    CHECK_FALSE(rep.witness.has_value());
    CHECK(vstatus_name(rep.status) == "prime-lookup");
}

TEST_CASE("characteristic 2 short-circuits to the prime lookup") {
    VNumberReport rep = v_number(ShapeSpec::parse("generic:3x3", FieldSpec(2)));
    CHECK(rep.status == VStatus::prime_lookup);
    CHECK(rep.value() == 0);
    CHECK(rep.note.find("coincide with the corresponding determinantal ideals") !=
          std::string::npos);
}

TEST_CASE("unclassified shapes are refused, not guessed") {
    CHECK_THROWS_AS(v_number(ShapeSpec::parse("hankel:3x6:t=3")), unclassified_error);
}

TEST_CASE("initial term of a witness lies in in(I) : in(p) (Lemma 2.4)") {
    // in(I : f) is contained in in(I) : in(f); check the witness colon
    for (const char* text : {"generic:2x3", "hankel:3x4"}) {
        ShapeSpec shape = ShapeSpec::parse(text);
        Ideal I = permanental_ideal(shape);
        MonomialOrder order = shape_order(shape);
        Witness w = paper_witnesses(shape)[0];
        REQUIRE(verify_witness(I, w));
        Ideal inI = initial_ideal(cached_groebner(I, order));
        Monomial lf = w.f.with_order(order).leading_monomial();
        const GroebnerBasis& gc = cached_groebner(w.expected_colon, order);
        for (const auto& g : gc.basis()) {
            Polynomial prod = Polynomial::from_terms(
                I.ring(), order, {Term{1, g.leading_monomial() * lf}});
            CHECK(member(prod, inI, order));
        }
    }
}

TEST_CASE("v-number over the field with five elements") {
    VNumberReport rep = v_number(ShapeSpec::parse("hankel:3x4", FieldSpec(5)));
    CHECK(rep.status == VStatus::exact);
    CHECK(rep.value() == 2);
}
