#ifndef PERMV_IDEAL_HPP
#define PERMV_IDEAL_HPP

#include <vector>

#include "permv/polynomial.hpp"

namespace permv {

// Generator list in a ring context. Zero generators are dropped and exact
// duplicates removed; the zero ideal is the empty list.
class Ideal {
  public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_homogeneous() const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

} // namespace permv

#endif
