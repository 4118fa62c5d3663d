#ifndef PERMV_CLASSIFICATION_HPP
#define PERMV_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "permv/groebner.hpp"
#include "permv/shapes.hpp"

namespace permv {

// A degree-d candidate f together with the prime its colon is expected to
// equal; verified by the v-number pipeline, never trusted.
struct Witness {
    Polynomial f;
    Ideal expected_colon;
    int degree = 0;
    std::string provenance;
};

// Trusted prime-ideal facts for one shape. Covers are variable-generated
// ideals such that every minimal prime of P_2 contains at least one cover.
struct KnownPrimeSet {
    ShapeSpec shape;
    bool known_prime = false;
    int paper_v = -1;
    std::vector<Ideal> min_prime_covers;
    std::optional<std::vector<Ideal>> ass_primes;
    std::optional<Polynomial> nonprime_probe;
    std::string provenance;
};

bool is_classified(const ShapeSpec& shape);

// Throws unclassified_error for t >= 3 or shapes outside the table.
KnownPrimeSet known_data(const ShapeSpec& shape);

// Explicit colon identities quoted in the literature for this shape; the
// symmetric-family witness is found by searching admissible (i,j,k) triples
// for y_ij * y_kk^2 in lexicographic order.
std::vector<Witness> paper_witnesses(const ShapeSpec& shape);

// True iff the reduced Groebner basis of I is a set of distinct variables,
// optionally plus one quadric uv + w^2 or uv + wz (distinct variables,
// disjoint from the linear ones) — prime whenever char != 2.
bool is_recognized_prime(const Ideal& I, const BuchbergerCaps& caps = {});

// Instantiation of the eleven quoted reduced-basis families for P_2 of the
// n x n symmetric shape (items (1a)-(6b)), deduplicated.
std::vector<Polynomial> symmetric_family_basis(int n, const FieldSpec& field);

// The quoted (non-reduced) Groebner generating set for P_2(hankel 3x6).
std::vector<Polynomial> hankel36_quoted_basis(const FieldSpec& field);

} // namespace permv

#endif
