#ifndef PERMV_GROEBNER_HPP
#define PERMV_GROEBNER_HPP

#include <optional>
#include <span>
#include <utility>

#include "permv/ideal.hpp"

namespace permv {

struct BuchbergerCaps {
    std::size_t max_pair_reductions = 200000;
    std::size_t max_basis_bytes = std::size_t(64) << 20;
};

// Reduced monic Groebner basis, sorted by (total degree ascending, leading
// monomial descending) under its order.
class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<Polynomial> basis, MonomialOrder order, Ideal source)
        : basis_(std::move(basis)), order_(std::move(order)), source_(std::move(source)) {}

    const std::vector<Polynomial>& basis() const { return basis_; }
    const MonomialOrder& order() const { return order_; }
    const Ideal& source() const { return source_; }
    bool contains_one() const;

  private:
    std::vector<Polynomial> basis_;
    MonomialOrder order_;
    Ideal source_;
};

// lcm(in f, in g)/in(f) * f - lcm(in f, in g)/in(g) * g.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full reduction: repeatedly rewrites the order-largest reducible term by
// the first applicable basis element, until no term is divisible by any
// basis leading monomial.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger with normal pair-selection strategy (minimal lcm total degree,
// ties by the order on lcms, then insertion index), coprime-lcm and chain
// criteria. Deterministic; throws cap_exceeded on resource exhaustion.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerCaps& caps = {});

// Memoized buchberger; cache key covers ring, generators, and order.
const GroebnerBasis& cached_groebner(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerCaps& caps = {});

struct GroebnerCheck {
    bool ok = false;
    // First S-pair (indices into gens) whose normal form is nonzero.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

GroebnerCheck is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

// Monomial ideal of basis leading monomials.
Ideal initial_ideal(const GroebnerBasis& gb);

bool member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order,
            const BuchbergerCaps& caps = {});

} // namespace permv

#endif
