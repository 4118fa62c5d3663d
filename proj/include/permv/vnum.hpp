#ifndef PERMV_VNUM_HPP
#define PERMV_VNUM_HPP

#include <cstdint>

#include "permv/classification.hpp"
#include "permv/ideal_ops.hpp"

namespace permv {

// Least degree of a homogeneous f with f*J ⊆ I and f ∉ I, found by exact
// per-degree nullspace computation; no value within the cap otherwise.
struct AlphaResult {
    std::optional<int> value;
    int cap = 0;
    struct DegreeDims {
        int degree;
        long solution_dim;
        long ideal_dim;
    };
    std::vector<DegreeDims> dims;
    // A concrete element of (I:J) \ I at the reported degree.
    std::optional<Polynomial> element;
};

AlphaResult alpha_quotient(const Ideal& I, const Ideal& J, int cap, const MonomialOrder& order,
                           const BuchbergerCaps& caps = {});

// min over the full Ass list (when available) or over covers of
// alpha_quotient values; alphas exceeding the cap count as cap + 1.
int v_lower_bound(const Ideal& I, const KnownPrimeSet& data, int cap, const MonomialOrder& order,
                  const BuchbergerCaps& caps = {});

// colon_poly(I, w.f) equals w.expected_colon and the latter is a recognized
// prime; establishes v(I) <= deg(w.f).
bool verify_witness(const Ideal& I, const Witness& w, const BuchbergerCaps& caps = {});

// True iff I : probe is neither I nor the unit ideal (then I is not prime).
// Requires probe ∉ I.
bool certify_not_prime(const Ideal& I, const Polynomial& probe, const BuchbergerCaps& caps = {});

enum class VStatus { exact, bounds_only, prime_lookup };

std::string vstatus_name(VStatus s);

struct VNumberReport {
    ShapeSpec shape;
    int lower = 0;
    int upper = -1; // -1: no verified upper bound
    std::optional<Witness> witness;
    bool witness_verified = false;
    VStatus status = VStatus::bounds_only;
    int value() const { return status == VStatus::prime_lookup ? 0 : lower; }
    std::string note;
    double elapsed_ms = 0.0;
};

VNumberReport v_number(const ShapeSpec& shape, int cap_degree = 4, std::uint64_t seed = 0,
                       const BuchbergerCaps& caps = {});

} // namespace permv

#endif
