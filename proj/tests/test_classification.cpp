#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permv/classification.hpp"
#include "permv/ideal_ops.hpp"

using namespace permv;

namespace {

Polynomial P(const std::string& text, const RingPtr& r) {
    return parse_polynomial(text, r, MonomialOrder::lex(r->nvars()));
}

} // namespace

TEST_CASE("classification covers exactly the t = 2 table") {
    CHECK(is_classified(ShapeSpec::parse("generic:2x2")));
    CHECK(is_classified(ShapeSpec::parse("generic:5x9")));
    CHECK(is_classified(ShapeSpec::parse("symmetric:6")));
    CHECK(is_classified(ShapeSpec::parse("hankel:4x7")));
    CHECK_FALSE(is_classified(ShapeSpec::parse("hankel:3x6:t=3")));
    CHECK_FALSE(is_classified(ShapeSpec::parse("generic:3x3:t=1")));
    CHECK_THROWS_AS(known_data(ShapeSpec::parse("hankel:3x6:t=3")), unclassified_error);
    CHECK_THROWS_AS(known_data(ShapeSpec::parse("generic:3x3:t=3")), unclassified_error);
}

TEST_CASE("known prime shapes") {
    for (const char* text : {"generic:2x2", "symmetric:2", "hankel:2x2"}) {
        KnownPrimeSet d = known_data(ShapeSpec::parse(text));
        CHECK(d.known_prime);
        CHECK(d.paper_v == 0);
        CHECK(paper_witnesses(ShapeSpec::parse(text)).empty());
    }
}

TEST_CASE("quoted v-number table values") {
    auto v = [](const char* text) { return known_data(ShapeSpec::parse(text)).paper_v; };
    CHECK(v("generic:2x3") == 2);
    CHECK(v("generic:2x5") == 2);
    CHECK(v("generic:3x3") == 3);
    CHECK(v("generic:3x4") == 3);
    CHECK(v("symmetric:3") == 3);
    CHECK(v("symmetric:4") == 3);
    CHECK(v("hankel:2x3") == 3);
    CHECK(v("hankel:2x4") == 2);
    CHECK(v("hankel:2x6") == 2);
    CHECK(v("hankel:3x3") == 3);
    CHECK(v("hankel:3x4") == 2);
    CHECK(v("hankel:3x5") == 2);
    CHECK(v("hankel:4x4") == 2);
    CHECK(v("hankel:3x6") == 1);
    CHECK(v("hankel:4x5") == 1);
    CHECK(v("hankel:3x7") == 1); // m >= 3 and m+n-1 >= 9
    CHECK(v("hankel:5x5") == 1);
}

TEST_CASE("cover and Ass list shapes") {
    KnownPrimeSet g24 = known_data(ShapeSpec::parse("generic:2x4"));
    CHECK(g24.min_prime_covers.size() == 8); // one per variable
    for (const auto& c : g24.min_prime_covers) {
        REQUIRE(c.generators().size() == 1);
        CHECK(c.generators()[0].is_monomial());
        CHECK(c.generators()[0].degree() == 1);
    }

    KnownPrimeSet g34 = known_data(ShapeSpec::parse("generic:3x4"));
    CHECK(g34.min_prime_covers.size() == 7); // 3 rows + 4 columns

    KnownPrimeSet s4 = known_data(ShapeSpec::parse("symmetric:4"));
    CHECK(s4.min_prime_covers.size() == 6); // one q_rs per pair r < s

    KnownPrimeSet h25 = known_data(ShapeSpec::parse("hankel:2x5"));
    REQUIRE(h25.ass_primes.has_value());
    CHECK(h25.ass_primes->size() == 3);

    KnownPrimeSet h36 = known_data(ShapeSpec::parse("hankel:3x6"));
    REQUIRE(h36.min_prime_covers.size() == 1);
    CHECK(h36.min_prime_covers[0].generators()[0] ==
          P("x_5", h36.min_prime_covers[0].ring()));
}

TEST_CASE("covers contain the permanental ideal") {
    for (const char* text : {"symmetric:3", "hankel:3x4"}) {
        ShapeSpec shape = ShapeSpec::parse(text);
        Ideal I = permanental_ideal(shape);
        KnownPrimeSet d = known_data(shape);
        const std::vector<Ideal>& primes =
            d.ass_primes ? *d.ass_primes : d.min_prime_covers;
        MonomialOrder order = shape_order(shape);
        for (const auto& p : primes)
            for (const auto& g : I.generators()) CHECK(member(g, p, order));
    }
}

TEST_CASE("nonprime probes lie outside the ideal") {
    for (const char* text : {"generic:2x3", "generic:3x3", "symmetric:3", "hankel:3x4"}) {
        ShapeSpec shape = ShapeSpec::parse(text);
        KnownPrimeSet d = known_data(shape);
        REQUIRE(d.nonprime_probe.has_value());
        CHECK_FALSE(member(*d.nonprime_probe, permanental_ideal(shape), shape_order(shape)));
    }
}

TEST_CASE("prime recognition accepts variable ideals plus one quadric") {
    RingPtr r = make_ring({"x_1", "x_2", "x_3", "x_4", "x_5"}, FieldSpec(0));
    auto I = [&](std::vector<std::string> texts) {
        std::vector<Polynomial> gens;
        for (const auto& t : texts) gens.push_back(P(t, r));
        return Ideal(r, std::move(gens));
    };
    CHECK(is_recognized_prime(I({"x_1", "x_3"})));
    CHECK(is_recognized_prime(I({"x_1", "x_2*x_3 + x_4^2"})));
    CHECK(is_recognized_prime(I({"x_1", "x_2*x_3 + x_4*x_5"})));
    CHECK(is_recognized_prime(I({"x_2*x_3 + x_4^2"})));

    CHECK_FALSE(is_recognized_prime(I({"x_1^2"})));              // not radical
    CHECK_FALSE(is_recognized_prime(I({"x_1", "x_1 + 1"})));     // unit ideal
    CHECK_FALSE(is_recognized_prime(I({"x_2^2 + x_4^2"})));      // no cross term
    CHECK_FALSE(is_recognized_prime(I({"x_2*x_3 + x_2*x_4"})));  // repeated variable
    CHECK_FALSE(is_recognized_prime(I({"x_2", "x_2*x_3 + x_4^2", "x_1*x_5 + x_3^2"})));
    CHECK_FALSE(is_recognized_prime(I({"x_1*x_2 - x_3*x_4"})));  // wrong coefficients
    // quadric sharing a variable with the linear part reduces away or fails
    CHECK_FALSE(is_recognized_prime(I({"x_2", "x_2*x_3 + x_4^2"}))); // leaves x_4^2
}

TEST_CASE("prime recognition is refused in characteristic 2") {
    RingPtr r = make_ring({"x_1", "x_2", "x_3"}, FieldSpec(2));
    Ideal I(r, {P("x_1", r)});
    CHECK_THROWS_AS(is_recognized_prime(I), domain_error);
}

TEST_CASE("paper witnesses match the quoted identities") {
    std::vector<Witness> g23 = paper_witnesses(ShapeSpec::parse("generic:2x3"));
    REQUIRE(g23.size() == 1);
    CHECK(g23[0].degree == 2);
    CHECK(g23[0].f == P("x_1_1*x_2_2", g23[0].f.ring()));
    CHECK(g23[0].f.degree() == g23[0].degree);

    std::vector<Witness> g33 = paper_witnesses(ShapeSpec::parse("generic:3x3"));
    REQUIRE(g33.size() == 1);
    CHECK(g33[0].degree == 3);
    CHECK(g33[0].expected_colon.generators().size() == 6); // rows 2 and 3

    std::vector<Witness> s3 = paper_witnesses(ShapeSpec::parse("symmetric:3"));
    REQUIRE(s3.size() == 1);
    CHECK(s3[0].degree == 3);
    CHECK(is_recognized_prime(s3[0].expected_colon));

    std::vector<Witness> h36 = paper_witnesses(ShapeSpec::parse("hankel:3x6"));
    REQUIRE(h36.size() == 1);
    CHECK(h36[0].degree == 1);
    CHECK(h36[0].f == P("x_5", h36[0].f.ring()));
    CHECK(h36[0].expected_colon.generators().size() == 7); // x_1..x_7, not x_8

    // every witness lies outside its ideal
    for (const char* text : {"generic:2x3", "symmetric:3", "hankel:2x4", "hankel:3x6"}) {
        ShapeSpec shape = ShapeSpec::parse(text);
        for (const auto& w : paper_witnesses(shape))
            CHECK_FALSE(member(w.f, permanental_ideal(shape), shape_order(shape)));
    }
}

TEST_CASE("symmetric quoted families instantiate to a Groebner basis") {
    std::vector<Polynomial> fams = symmetric_family_basis(3, FieldSpec(0));
    CHECK(fams.size() == 14); // the 14-element set G for n = 3
    MonomialOrder order = MonomialOrder::lex(6);
    CHECK(is_groebner_basis(fams, order).ok);
    // it generates P_2 of the symmetric 3x3
    Ideal F(fams[0].ring(), fams);
    Ideal I = map_to_ring(permanental_ideal(ShapeSpec::parse("symmetric:3")), fams[0].ring(),
                          {0, 1, 2, 3, 4, 5}, order);
    CHECK(ideal_equal(F, I));
    CHECK_THROWS_AS(symmetric_family_basis(1, FieldSpec(0)), domain_error);
}

TEST_CASE("hankel 3x6 quoted generating set is a Groebner basis") {
    std::vector<Polynomial> quoted = hankel36_quoted_basis(FieldSpec(0));
    REQUIRE(!quoted.empty());
    const RingPtr& r = quoted[0].ring();
    CHECK(std::find(quoted.begin(), quoted.end(), P("x_2^4", r)) != quoted.end());
    CHECK(std::find(quoted.begin(), quoted.end(), P("x_7^4", r)) != quoted.end());
    CHECK(is_groebner_basis(quoted, MonomialOrder::lex(8)).ok);
}
