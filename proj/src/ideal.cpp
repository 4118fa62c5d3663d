#include "permv/ideal.hpp"

namespace permv {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw ring_mismatch("generator from a different ring");
        bool dup = false;
        for (const auto& h : gens_)
            if (h == g) {
                dup = true;
                break;
            }
        if (!dup) gens_.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const {
    for (const auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

} // namespace permv
