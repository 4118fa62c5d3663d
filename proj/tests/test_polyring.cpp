#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permv/polynomial.hpp"

using namespace permv;

namespace {

// Variable names follow the shape grammar [xy](_\d+){1,2}.
RingPtr ring3(unsigned long p = 0) {
    return make_ring({"x_1", "x_2", "x_3"}, FieldSpec(p));
}

Polynomial P(const std::string& text, const RingPtr& r) {
    return parse_polynomial(text, r, MonomialOrder::lex(r->nvars()));
}

} // namespace

TEST_CASE("field over the rationals") {
    FieldSpec q(0);
    CHECK(q.is_rational());
    CHECK(q.normalize(mpq_class(6, 4)) == mpq_class(3, 2));
    CHECK(q.inv(mpq_class(3, 2)) == mpq_class(2, 3));
    CHECK(q.div(1, 3) == mpq_class(1, 3));
    CHECK(q.from_string("3/4") == mpq_class(3, 4));
    CHECK(q.from_string("-7") == -7);
    CHECK(q.to_string(mpq_class(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(q.inv(0), domain_error);
    CHECK_THROWS_AS(q.from_string("1/0"), parse_error);
    CHECK_THROWS_AS(q.from_string("a"), parse_error);
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5(5);
    CHECK_FALSE(f5.is_rational());
    CHECK(f5.normalize(7) == 2);
    CHECK(f5.normalize(-1) == 4);
    CHECK(f5.normalize(mpq_class(1, 2)) == 3); // 2^{-1} = 3 mod 5
    CHECK(f5.inv(2) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.add(4, 4) == 3);
    CHECK_THROWS_AS(f5.inv(0), domain_error);
    CHECK_THROWS_AS(f5.normalize(mpq_class(1, 5)), domain_error);
    CHECK_THROWS_AS(f5.from_string("1/5"), parse_error);
    CHECK_THROWS_AS(FieldSpec(4), domain_error);
    CHECK_THROWS_AS(FieldSpec(1), domain_error);
}

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::variable(3, 0);
    Monomial y2 = Monomial::variable(3, 1, 2);
    Monomial m = x * y2;
    CHECK(m.degree() == 3);
    CHECK(x.divides(m));
    CHECK_FALSE(m.divides(x));
    CHECK(x.coprime(y2));
    CHECK_FALSE(m.coprime(x));
    CHECK(m / x == y2);
    CHECK_THROWS_AS(x / y2, domain_error);
    CHECK(x.lcm(y2) == m);
    CHECK(m.gcd(x) == x);
    CHECK(Monomial(3).is_one());
    CHECK(Monomial(3).divides(x));
}

TEST_CASE("lex order with a priority permutation") {
    MonomialOrder lex = MonomialOrder::lex(3); // x_1 > x_2 > x_3
    Monomial a = Monomial::variable(3, 0), b = Monomial::variable(3, 1),
             c3 = Monomial::variable(3, 2, 3);
    CHECK(lex.greater(a, b));
    CHECK(lex.greater(b, c3)); // lex ignores total degree
    CHECK(lex.compare(a, a) == 0);

    MonomialOrder rev = MonomialOrder::lex({2, 1, 0}); // x_3 > x_2 > x_1
    CHECK(rev.greater(c3, a));
    CHECK(rev.elim_block_size() == 0);

    MonomialOrder elim = MonomialOrder::lex({1, 0, 2}, 1); // eliminate x_2
    CHECK(elim.elim_block_size() == 1);
    CHECK(elim.greater(b, a * c3));
    CHECK(lex != rev);
    CHECK(lex == MonomialOrder::lex(3));
}

TEST_CASE("polynomial canonicalization and arithmetic") {
    RingPtr r = ring3();
    Polynomial f = P("x_1 + x_2", r);
    Polynomial g = P("x_1 - x_2", r);
    CHECK(f * g == P("x_1^2 - x_2^2", r));
    CHECK((f + g) == P("2*x_1", r));
    CHECK((f - f).is_zero());
    CHECK((-f) == P("-x_1 - x_2", r));
    CHECK(f.scale(mpq_class(1, 2)) == P("1/2*x_1 + 1/2*x_2", r));

    Polynomial sq = f * f;
    CHECK(sq.degree() == 2);
    CHECK(sq.is_homogeneous());
    CHECK(sq.leading_monomial() == Monomial::variable(3, 0, 2));
    CHECK_FALSE(P("x_1^2 + x_2", r).is_homogeneous());
    CHECK(Polynomial(r, MonomialOrder::lex(3)).degree() == -1);
    CHECK_THROWS_AS(Polynomial(r, MonomialOrder::lex(3)).leading_term(), domain_error);

    // from_terms merges duplicates and drops zeros
    Monomial x = Monomial::variable(3, 0);
    Polynomial merged = Polynomial::from_terms(
        r, MonomialOrder::lex(3), {Term{2, x}, Term{-2, x}, Term{0, Monomial(3)}});
    CHECK(merged.is_zero());
}

TEST_CASE("terms are strictly decreasing under the order") {
    RingPtr r = ring3();
    Polynomial f = P("x_3^3 + x_2*x_3 + x_1", r);
    REQUIRE(f.terms().size() == 3);
    MonomialOrder lex = MonomialOrder::lex(3);
    for (std::size_t i = 0; i + 1 < f.terms().size(); ++i)
        CHECK(lex.greater(f.terms()[i].mono, f.terms()[i + 1].mono));

    Polynomial g = f.with_order(MonomialOrder::lex({2, 1, 0}));
    CHECK(g.leading_monomial() == Monomial::variable(3, 2, 3));
    CHECK(g.terms().size() == 3);
    CHECK(g.with_order(lex) == f);
}

TEST_CASE("monic and display normalization") {
    RingPtr r = ring3();
    CHECK(P("2*x_1 + 4*x_2", r).monic() == P("x_1 + 2*x_2", r));
    CHECK(P("1/2*x_1 + 1/3*x_2", r).normalized_display() == P("3*x_1 + 2*x_2", r));
    CHECK(P("-2*x_1 - 4*x_2", r).normalized_display() == P("x_1 + 2*x_2", r));
    CHECK(P("6*x_1 + 9*x_2", r).normalized_display() == P("2*x_1 + 3*x_2", r));

    RingPtr r5 = ring3(5);
    Polynomial g = parse_polynomial("2*x_1 + x_2", r5, MonomialOrder::lex(3));
    CHECK(g.normalized_display() == parse_polynomial("x_1 + 3*x_2", r5, MonomialOrder::lex(3)));
}

TEST_CASE("coefficients reduce modulo the characteristic") {
    RingPtr r5 = ring3(5);
    MonomialOrder lex = MonomialOrder::lex(3);
    Polynomial f = parse_polynomial("3*x_1", r5, lex);
    Polynomial g = parse_polynomial("2*x_1 + x_2", r5, lex);
    CHECK((f + g) == parse_polynomial("x_2", r5, lex)); // 5*x_1 vanishes
    CHECK((f * g) == parse_polynomial("x_1^2 + 3*x_1*x_2", r5, lex));
}

TEST_CASE("specialize substitutes field values") {
    RingPtr r = ring3();
    Polynomial f = P("x_1^2*x_2 + x_3", r);
    CHECK(f.specialize({{0, 2}}) == P("4*x_2 + x_3", r));
    CHECK(f.specialize({{0, 2}, {1, 3}, {2, 1}}).is_constant());
    CHECK(f.specialize({{0, 0}}) == P("x_3", r));
}

TEST_CASE("parse round trips") {
    RingPtr r = ring3();
    // to_string emits the display normalization, so parsing it back recovers
    // the polynomial up to that normalization (exactly, when already normal)
    for (const char* text :
         {"x_1", "x_1 + x_2 + x_3", "x_1^2 - 2*x_1*x_2 + x_2^2", "x_1*x_2*x_3 - 1"}) {
        Polynomial f = P(text, r);
        CHECK(P(f.to_string(), r) == f);
    }
    for (const char* text : {"-x_1^3 + 1/2*x_3", "3", "-7/2", "2*x_1 + 4*x_2"}) {
        Polynomial f = P(text, r);
        CHECK(P(f.to_string(), r) == f.normalized_display());
    }
    CHECK(P("0", r).is_zero());
    CHECK(P("+x_1", r) == P("x_1", r));
    // two-group names parse as well
    RingPtr g = make_ring({"x_1_1", "x_1_2", "y_2_2"}, FieldSpec(0));
    Polynomial h = parse_polynomial("x_1_1*y_2_2 + x_1_2^2", g, MonomialOrder::lex(3));
    CHECK(parse_polynomial(h.to_string(), g, MonomialOrder::lex(3)) == h);
}

TEST_CASE("parse rejects malformed input") {
    RingPtr r = ring3();
    CHECK_THROWS_AS(P("x_9 + 1", r), parse_error);  // unknown variable
    CHECK_THROWS_AS(P("z_1", r), parse_error);      // bad head letter
    CHECK_THROWS_AS(P("x", r), parse_error);        // missing index group
    CHECK_THROWS_AS(P("x_1 +", r), parse_error);    // dangling operator
    CHECK_THROWS_AS(P("x_1^", r), parse_error);     // missing exponent
    CHECK_THROWS_AS(P("x_1^-2", r), parse_error);   // negative exponent
    CHECK_THROWS_AS(P("", r), parse_error);         // empty
    CHECK_THROWS_AS(P("1/0", r), parse_error);      // zero denominator
    CHECK_THROWS_AS(P("2x_1", r), parse_error);     // missing '*'
    CHECK_THROWS_AS(P("x_1 x_2", r), parse_error);  // missing operator
}

TEST_CASE("ring identity matters for operations") {
    RingPtr a = ring3();
    RingPtr b = make_ring({"x_1", "x_2"}, FieldSpec(0));
    Polynomial f = P("x_1", a);
    Polynomial g = parse_polynomial("x_1", b, MonomialOrder::lex(2));
    CHECK_THROWS_AS(f + g, ring_mismatch);
    CHECK(same_ring(a, make_ring({"x_1", "x_2", "x_3"}, FieldSpec(0))));
    CHECK_FALSE(same_ring(a, make_ring({"x_1", "x_2", "x_3"}, FieldSpec(5))));
}
