#include "permv/vnum.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <random>
#include <sstream>

#include "permv/linalg.hpp"

namespace permv {

namespace {

Polynomial monomial_poly(const RingPtr& ring, const MonomialOrder& order, const Monomial& m) {
    return Polynomial::from_terms(ring, order, {Term{1, m}});
}

// Basis of { f homogeneous of degree d : NF(f * g) = 0 for all generators g
// of J }, as polynomials in the monomial basis of degree d.
std::vector<Polynomial> solution_basis(const Ideal& I, const GroebnerBasis& gb, const Ideal& J,
                                       unsigned d, const MonomialOrder& order) {
    const RingPtr& ring = I.ring();
    const FieldSpec& field = ring->field();
    std::vector<Monomial> mons = monomials_of_degree(ring->nvars(), d, order);

    // one block of rows per generator of J; rows indexed by the monomials
    // appearing in the normal forms
    struct Row {
        std::vector<mpq_class> coeffs;
    };
    std::vector<Row> rows;
    for (const auto& g : J.generators()) {
        std::vector<Polynomial> nf(mons.size());
        std::vector<Monomial> support;
        for (std::size_t c = 0; c < mons.size(); ++c) {
            nf[c] = normal_form(monomial_poly(ring, order, mons[c]) * g, gb);
            for (const auto& t : nf[c].terms())
                if (std::find(support.begin(), support.end(), t.mono) == support.end())
                    support.push_back(t.mono);
        }
        for (const auto& s : support) {
            Row row;
            row.coeffs.assign(mons.size(), 0);
            for (std::size_t c = 0; c < mons.size(); ++c)
                for (const auto& t : nf[c].terms())
                    if (t.mono == s) row.coeffs[c] = t.coeff;
            rows.push_back(std::move(row));
        }
    }

    FieldMatrix A(rows.size(), mons.size(), field);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) A.at(r, c) = rows[r].coeffs[c];

    std::vector<Polynomial> basis;
    for (const auto& v : A.nullspace()) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (v[c] != 0) terms.push_back(Term{v[c], mons[c]});
        basis.push_back(Polynomial::from_terms(ring, order, std::move(terms)));
    }
    return basis;
}

} // namespace

AlphaResult alpha_quotient(const Ideal& I, const Ideal& J, int cap, const MonomialOrder& order,
                           const BuchbergerCaps& caps) {
    if (!I.is_homogeneous()) throw domain_error("alpha_quotient: I must be homogeneous");
    if (J.generators().empty()) throw domain_error("alpha_quotient: J must be nonzero");
    if (!same_ring(I.ring(), J.ring())) throw ring_mismatch("alpha_quotient: different rings");

    const GroebnerBasis& gb = cached_groebner(I, order, caps);
    AlphaResult result;
    result.cap = cap;
    for (int d = 0; d <= cap; ++d) {
        std::vector<Polynomial> sols = solution_basis(I, gb, J, unsigned(d), order);
        long ideal_dim = long(ideal_degree_dim(I, unsigned(d), order, caps));
        result.dims.push_back({d, long(sols.size()), ideal_dim});
        if (long(sols.size()) <= ideal_dim) continue;

        for (const auto& f : sols) {
            if (normal_form(f, gb).is_zero()) continue;
            // re-verify independently of the linear algebra
            for (const auto& g : J.generators())
                if (!normal_form(f * g, gb).is_zero())
                    throw domain_error("alpha_quotient: solution failed re-verification");
            result.value = d;
            result.element = f;
            return result;
        }
        throw domain_error("alpha_quotient: dimension excess without a witness element");
    }
    return result; // value empty: exceeds cap
}

int v_lower_bound(const Ideal& I, const KnownPrimeSet& data, int cap, const MonomialOrder& order,
                  const BuchbergerCaps& caps) {
    const std::vector<Ideal>& primes =
        data.ass_primes ? *data.ass_primes : data.min_prime_covers;
    if (primes.empty())
        throw unclassified_error("v_lower_bound: no Ass list or covers for " +
                                 data.shape.to_string());
    int best = INT_MAX;
    for (const auto& J : primes) {
        AlphaResult a = alpha_quotient(I, J, cap, order, caps);
        best = std::min(best, a.value ? *a.value : cap + 1);
    }
    return best;
}

bool verify_witness(const Ideal& I, const Witness& w, const BuchbergerCaps& caps) {
    if (w.f.is_zero() || w.f.degree() != w.degree)
        throw domain_error("verify_witness: malformed witness");
    Ideal colon = colon_poly(I, w.f, caps);
    return ideal_equal(colon, w.expected_colon, caps) &&
           is_recognized_prime(w.expected_colon, caps);
}

bool certify_not_prime(const Ideal& I, const Polynomial& probe, const BuchbergerCaps& caps) {
    MonomialOrder order = MonomialOrder::lex(I.ring()->nvars());
    const GroebnerBasis& gb = cached_groebner(I, order, caps);
    if (normal_form(probe, gb).is_zero())
        throw domain_error("certify_not_prime: probe lies in the ideal");
    Ideal colon = colon_poly(I, probe, caps);
    if (ideal_equal(colon, I, caps)) return false;
    return !cached_groebner(colon, order, caps).contains_one();
}

std::string vstatus_name(VStatus s) {
    switch (s) {
    case VStatus::exact: return "exact";
    case VStatus::bounds_only: return "bounds-only";
    case VStatus::prime_lookup: return "prime-lookup";
    }
    throw domain_error("unknown status");
}

VNumberReport v_number(const ShapeSpec& shape, int cap_degree, std::uint64_t seed,
                       const BuchbergerCaps& caps) {
    auto t0 = std::chrono::steady_clock::now();
    shape.validate();
    VNumberReport rep;
    rep.shape = shape;
    auto finish = [&t0, &rep]() -> VNumberReport& {
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return rep;
    };

    if (shape.field.characteristic() == 2) {
        rep.status = VStatus::prime_lookup;
        rep.lower = rep.upper = 0;
        rep.note = "characteristic 2: reported by lookup, no computation path; the permanental "
                   "ideals \"coincide with the corresponding determinantal ideals, are prime\" "
                   "(Chau-Jayanthan sec.1), so v = 0";
        return finish();
    }

    KnownPrimeSet data = known_data(shape); // throws unclassified_error if unknown

    if (data.known_prime) {
        rep.status = VStatus::prime_lookup;
        rep.lower = rep.upper = 0;
        rep.note = "prime by classification: " + data.provenance;
        return finish();
    }

    Ideal I = permanental_ideal(shape);
    MonomialOrder order = shape_order(shape);

    // upper bound: least verified paper witness
    for (const Witness& w : paper_witnesses(shape)) {
        if (rep.upper >= 0 && w.degree >= rep.upper) continue;
        if (verify_witness(I, w, caps)) {
            rep.upper = w.degree;
            rep.witness = w;
            rep.witness_verified = true;
        }
    }

    int alpha_cap = rep.upper >= 0 ? rep.upper : cap_degree;
    std::ostringstream note;
    bool capped = false;
    try {
        rep.lower = v_lower_bound(I, data, alpha_cap, order, caps);
        note << (data.ass_primes ? "lower bound: min of alpha over the full Ass list"
                                 : "lower bound: min of alpha over covers (Lemma 2.3 with "
                                   "Lemma 2.2; equality of the min over Ass and Min)")
             << " [" << data.provenance << "]";
    } catch (const cap_exceeded&) {
        rep.lower = 0;
        capped = true;
        note << "lower bound: alpha computation hit the resource cap";
    }
    if (data.nonprime_probe && rep.lower < 1 && certify_not_prime(I, *data.nonprime_probe, caps))
        rep.lower = std::max(rep.lower, 1);

    // bounded deterministic witness search when no paper witness verified
    if (!rep.witness_verified) {
        const GroebnerBasis& gb = cached_groebner(I, order, caps);
        std::mt19937_64 rng(seed);
        const std::vector<Ideal>& primes =
            data.ass_primes ? *data.ass_primes : data.min_prime_covers;
        for (int d = std::max(rep.lower, 1); d <= cap_degree && !rep.witness_verified; ++d) {
            for (const Ideal& P : primes) {
                std::vector<Polynomial> sols = solution_basis(I, gb, P, unsigned(d), order);
                std::vector<Polynomial> candidates;
                for (const auto& f : sols)
                    if (!normal_form(f, gb).is_zero()) candidates.push_back(f);
                for (int r = 0; r < 64 && !sols.empty(); ++r) {
                    Polynomial f(I.ring(), order);
                    for (const auto& b : sols) {
                        unsigned long c = rng() % 7; // small deterministic coefficients
                        if (c != 0) f = f + b.scale(mpq_class(long(c)));
                    }
                    if (!normal_form(f, gb).is_zero()) candidates.push_back(f);
                }
                for (const auto& f : candidates) {
                    Ideal colon = colon_poly(I, f, caps);
                    if (!is_recognized_prime(colon, caps)) continue;
                    rep.upper = d;
                    rep.witness = Witness{f, colon, d, "found by bounded seeded search"};
                    rep.witness_verified = true;
                    break;
                }
                if (rep.witness_verified) break;
            }
        }
    }

    if (!capped && rep.upper >= 0 && rep.lower == rep.upper) {
        rep.status = VStatus::exact;
    } else {
        rep.status = VStatus::bounds_only;
        note << "; exactness not established (lower " << rep.lower << ", upper "
             << (rep.upper >= 0 ? std::to_string(rep.upper) : std::string("none")) << ")";
    }
    rep.note = note.str();
    return finish();
}

} // namespace permv
