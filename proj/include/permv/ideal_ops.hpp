#ifndef PERMV_IDEAL_OPS_HPP
#define PERMV_IDEAL_OPS_HPP

#include <vector>

#include "permv/groebner.hpp"

namespace permv {

// Homogeneous component of an ideal at a fixed degree, as a linearly
// independent polynomial basis.
struct DegreeSlice {
    unsigned degree = 0;
    std::vector<Polynomial> basis;
};

// Per-degree standard monomials (not divisible by any basis leading
// monomial) of a fixed Groebner basis, up to a cap degree.
class StandardMonomialTable {
  public:
    StandardMonomialTable(const GroebnerBasis& gb, unsigned cap_degree);

    unsigned cap_degree() const { return unsigned(per_degree_.size()) - 1; }
    const std::vector<Monomial>& at_degree(unsigned d) const { return per_degree_.at(d); }

  private:
    std::vector<std::vector<Monomial>> per_degree_;
};

// All monomials of total degree d in nvars variables, strictly decreasing
// under the given order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d,
                                          const MonomialOrder& order);

// dim of the full degree-d slice of the polynomial ring: C(d+n-1, n-1).
unsigned long ring_degree_dim(std::size_t nvars, unsigned d);

enum class TruncateMode { at_most, exactly };

Ideal intersect(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps = {});

// I ∩ K[keep] via a lex elimination order with the discarded variables first.
Ideal contract_to_subring(const Ideal& I, const std::vector<std::size_t>& keep,
                          const BuchbergerCaps& caps = {});

// I : f, via intersect(I, (f)) followed by exact division by f.
Ideal colon_poly(const Ideal& I, const Polynomial& f, const BuchbergerCaps& caps = {});

// I : J = intersection over generators g of J of I : g.
Ideal colon_ideal(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps = {});

bool ideal_equal(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps = {});

// Exact division q with f = q * g; throws domain_error if g does not divide.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Basis {m - NF(m) : m degree-d monomial in in(I)} of I_d.
DegreeSlice degree_slice(const Ideal& I, unsigned d, const MonomialOrder& order,
                         const BuchbergerCaps& caps = {});

Ideal truncate(const Ideal& I, unsigned k, TruncateMode mode, const MonomialOrder& order,
               const BuchbergerCaps& caps = {});

// Degree-d monomials of M : in(J); M monomial, all in(J) of one degree.
std::vector<Monomial> monomial_colon_slice(const Ideal& M, const Ideal& J, unsigned d,
                                           const MonomialOrder& order);

unsigned long ideal_degree_dim(const Ideal& I, unsigned d, const MonomialOrder& order,
                               const BuchbergerCaps& caps = {});

// Re-express an ideal in another ring; index_map[i] is the target index of
// source variable i.
Ideal map_to_ring(const Ideal& I, const RingPtr& target,
                  const std::vector<std::size_t>& index_map, const MonomialOrder& target_order);

} // namespace permv

#endif
