#ifndef PERMV_POLYNOMIAL_HPP
#define PERMV_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "permv/monomial.hpp"
#include "permv/ring.hpp"

namespace permv {

struct Term {
    mpq_class coeff;
    Monomial mono;
};

// Sparse multivariate polynomial; terms are kept strictly decreasing under
// the designated monomial order, with no zero coefficients and no duplicate
// monomials. The zero polynomial is the empty term list.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(RingPtr ring, MonomialOrder order)
        : ring_(std::move(ring)), order_(std::move(order)) {}

    // Canonicalizes: merges duplicate monomials, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    // Throw domain_error on the zero polynomial.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const mpq_class& leading_coeff() const { return leading_term().coeff; }

    Polynomial with_order(const MonomialOrder& order) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial scale(const mpq_class& c) const;
    // Multiply by a single term c * m.
    Polynomial times_term(const mpq_class& c, const Monomial& m) const;

    Polynomial monic() const;
    // Display normalization: denominator-cleared, content-free, positive
    // leading coefficient (monic over a prime field).
    Polynomial normalized_display() const;

    // Substitute field values for the given variables; others stay symbolic.
    Polynomial specialize(const std::map<std::size_t, mpq_class>& assignment) const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

// Parses the polynomial grammar:
//   poly  := ["+"|"-"] term (("+"|"-") term)*
//   term  := coeff | [coeff "*"] factor ("*" factor)*
//   factor:= var ["^" nat]
//   coeff := int | int "/" nat
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& order);

std::string monomial_to_string(const Monomial& m, const RingContext& ring);

} // namespace permv

#endif
