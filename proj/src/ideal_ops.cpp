#include "permv/ideal_ops.hpp"

#include <algorithm>
#include <limits>

namespace permv {

namespace {

void enumerate_exponents(std::size_t nvars, unsigned remaining, std::size_t index,
                         std::vector<unsigned>& current, std::vector<Monomial>& out) {
    if (index + 1 == nvars) {
        current[index] = remaining;
        out.push_back(Monomial(current));
        current[index] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        current[index] = e;
        enumerate_exponents(nvars, remaining - e, index + 1, current, out);
    }
    current[index] = 0;
}

bool divisible_by_any(const Monomial& m, const std::vector<Polynomial>& basis) {
    for (const auto& b : basis)
        if (b.leading_monomial().divides(m)) return true;
    return false;
}

Polynomial monomial_poly(const RingPtr& ring, const MonomialOrder& order, const Monomial& m,
                         const mpq_class& c = 1) {
    return Polynomial::from_terms(ring, order, {Term{c, m}});
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d,
                                          const MonomialOrder& order) {
    if (nvars == 0) throw domain_error("monomials_of_degree over an empty ring");
    std::vector<Monomial> out;
    std::vector<unsigned> current(nvars, 0);
    enumerate_exponents(nvars, d, 0, current, out);
    std::sort(out.begin(), out.end(),
              [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
    return out;
}

unsigned long ring_degree_dim(std::size_t nvars, unsigned d) {
    if (nvars == 0) throw domain_error("ring_degree_dim over an empty ring");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), d + nvars - 1, nvars - 1);
    return b.get_ui();
}

StandardMonomialTable::StandardMonomialTable(const GroebnerBasis& gb, unsigned cap_degree) {
    std::size_t nvars = gb.source().ring()->nvars();
    per_degree_.resize(cap_degree + 1);
    for (unsigned d = 0; d <= cap_degree; ++d) {
        for (const auto& m : monomials_of_degree(nvars, d, gb.order()))
            if (!divisible_by_any(m, gb.basis())) per_degree_[d].push_back(m);
    }
}

Ideal map_to_ring(const Ideal& I, const RingPtr& target,
                  const std::vector<std::size_t>& index_map, const MonomialOrder& target_order) {
    if (index_map.size() != I.ring()->nvars())
        throw domain_error("map_to_ring: index map size mismatch");
    if (I.ring()->field() != target->field())
        throw ring_mismatch("map_to_ring: coefficient fields differ");
    constexpr std::size_t absent = std::numeric_limits<std::size_t>::max();
    std::vector<Polynomial> out;
    for (const auto& g : I.generators()) {
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m(target->nvars());
            for (std::size_t i = 0; i < index_map.size(); ++i) {
                if (t.mono[i] == 0) continue;
                if (index_map[i] == absent)
                    throw domain_error("map_to_ring: generator uses a dropped variable");
                m[index_map[i]] += t.mono[i];
            }
            terms.push_back(Term{t.coeff, std::move(m)});
        }
        out.push_back(Polynomial::from_terms(target, target_order, std::move(terms)));
    }
    return Ideal(target, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps) {
    if (!same_ring(I.ring(), J.ring())) throw ring_mismatch("intersect over different rings");
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars();

    std::vector<std::string> ext_vars;
    ext_vars.reserve(n + 1);
    ext_vars.push_back("t");
    for (const auto& v : ring->variables()) ext_vars.push_back(v);
    RingPtr ext = make_ring(std::move(ext_vars), ring->field());
    MonomialOrder ext_order = MonomialOrder::lex(ext->nvars());

    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = i + 1;

    Polynomial t = monomial_poly(ext, ext_order, Monomial::variable(ext->nvars(), 0));
    Polynomial one = monomial_poly(ext, ext_order, Monomial(ext->nvars()));

    Ideal I_ext = map_to_ring(I, ext, up, ext_order);
    Ideal J_ext = map_to_ring(J, ext, up, ext_order);
    std::vector<Polynomial> gens;
    for (const auto& g : I_ext.generators()) gens.push_back(t * g);
    for (const auto& h : J_ext.generators()) gens.push_back((one - t) * h);

    GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), ext_order, caps);

    std::vector<std::size_t> down(ext->nvars(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;

    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis()) {
        bool uses_t = false;
        for (const auto& term : g.terms())
            if (term.mono[0] != 0) {
                uses_t = true;
                break;
            }
        if (!uses_t) kept.push_back(g);
    }
    return map_to_ring(Ideal(ext, std::move(kept)), ring, down, MonomialOrder::lex(n));
}

Ideal contract_to_subring(const Ideal& I, const std::vector<std::size_t>& keep,
                          const BuchbergerCaps& caps) {
    const RingPtr& ring = I.ring();
    std::size_t n = ring->nvars();
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n) throw domain_error("contract_to_subring: variable index out of range");
        if (kept[k]) throw domain_error("contract_to_subring: duplicate variable index");
        kept[k] = true;
    }

    // lex with the dropped variables as a leading elimination block
    std::vector<unsigned> priority;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) priority.push_back(unsigned(i));
    std::size_t elim = priority.size();
    for (std::size_t k : keep) priority.push_back(unsigned(k));
    MonomialOrder order = MonomialOrder::lex(std::move(priority), elim);

    GroebnerBasis gb = buchberger(I, order, caps);

    std::vector<std::string> sub_vars;
    for (std::size_t k : keep) sub_vars.push_back(ring->var_name(k));
    RingPtr sub = make_ring(std::move(sub_vars), ring->field());

    std::vector<std::size_t> down(n, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < keep.size(); ++i) down[keep[i]] = i;

    std::vector<Polynomial> out;
    for (const auto& g : gb.basis()) {
        bool pure = true;
        for (const auto& term : g.terms())
            for (std::size_t i = 0; i < n && pure; ++i)
                if (term.mono[i] != 0 && !kept[i]) pure = false;
        if (pure) out.push_back(g);
    }
    return map_to_ring(Ideal(ring, std::move(out)), sub, down, MonomialOrder::lex(keep.size()));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw domain_error("exact_divide by zero");
    if (!same_ring(f.ring(), g.ring())) throw ring_mismatch("exact_divide over different rings");
    const FieldSpec& field = f.ring()->field();
    Polynomial gg = g.with_order(f.order());
    Polynomial q(f.ring(), f.order());
    Polynomial r = f;
    while (!r.is_zero()) {
        if (!gg.leading_monomial().divides(r.leading_monomial()))
            throw domain_error("exact_divide: not an exact multiple");
        mpq_class c = field.div(r.leading_coeff(), gg.leading_coeff());
        Monomial m = r.leading_monomial() / gg.leading_monomial();
        q = q + monomial_poly(f.ring(), f.order(), m, c);
        r = r - gg.times_term(c, m);
    }
    return q;
}

Ideal colon_poly(const Ideal& I, const Polynomial& f, const BuchbergerCaps& caps) {
    if (f.is_zero()) throw domain_error("colon by the zero polynomial");
    if (!same_ring(I.ring(), f.ring())) throw ring_mismatch("colon over different rings");
    Ideal meet = intersect(I, Ideal(I.ring(), {f}), caps);
    std::vector<Polynomial> out;
    for (const auto& g : meet.generators()) out.push_back(exact_divide(g, f));
    if (out.empty()) // I ∩ (f) = 0 only if I = 0
        return Ideal(I.ring(), {});
    return Ideal(I.ring(), std::move(out));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps) {
    if (J.generators().empty()) throw domain_error("colon by the zero ideal");
    Ideal result = colon_poly(I, J.generators()[0], caps);
    for (std::size_t k = 1; k < J.generators().size(); ++k)
        result = intersect(result, colon_poly(I, J.generators()[k], caps), caps);
    return result;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const BuchbergerCaps& caps) {
    if (!same_ring(I.ring(), J.ring())) throw ring_mismatch("ideal_equal over different rings");
    MonomialOrder order = MonomialOrder::lex(I.ring()->nvars());
    const GroebnerBasis& gi = cached_groebner(I, order, caps);
    const GroebnerBasis& gj = cached_groebner(J, order, caps);
    if (gi.basis().size() != gj.basis().size()) return false;
    for (std::size_t k = 0; k < gi.basis().size(); ++k)
        if (gi.basis()[k] != gj.basis()[k]) return false;
    return true;
}

DegreeSlice degree_slice(const Ideal& I, unsigned d, const MonomialOrder& order,
                         const BuchbergerCaps& caps) {
    if (!I.is_homogeneous()) throw domain_error("degree_slice of a non-homogeneous ideal");
    const GroebnerBasis& gb = cached_groebner(I, order, caps);
    DegreeSlice slice;
    slice.degree = d;
    for (const auto& m : monomials_of_degree(I.ring()->nvars(), d, order)) {
        if (!divisible_by_any(m, gb.basis())) continue;
        Polynomial mp = monomial_poly(I.ring(), order, m);
        slice.basis.push_back(mp - normal_form(mp, gb));
    }
    return slice;
}

Ideal truncate(const Ideal& I, unsigned k, TruncateMode mode, const MonomialOrder& order,
               const BuchbergerCaps& caps) {
    std::vector<Polynomial> gens;
    unsigned lo = (mode == TruncateMode::exactly) ? k : 0;
    for (unsigned d = lo; d <= k; ++d) {
        DegreeSlice slice = degree_slice(I, d, order, caps);
        for (auto& f : slice.basis) gens.push_back(std::move(f));
    }
    return Ideal(I.ring(), std::move(gens));
}

std::vector<Monomial> monomial_colon_slice(const Ideal& M, const Ideal& J, unsigned d,
                                           const MonomialOrder& order) {
    for (const auto& g : M.generators())
        if (!g.is_monomial()) throw domain_error("monomial_colon_slice: M is not monomial");
    std::vector<Monomial> mgens;
    for (const auto& g : M.generators()) mgens.push_back(g.leading_monomial());
    std::vector<Monomial> jlead;
    for (const auto& g : J.generators()) jlead.push_back(g.with_order(order).leading_monomial());

    std::vector<Monomial> out;
    for (const auto& u : monomials_of_degree(M.ring()->nvars(), d, order)) {
        bool all_in = true;
        for (const auto& lj : jlead) {
            Monomial prod = u * lj;
            bool in = false;
            for (const auto& m : mgens)
                if (m.divides(prod)) {
                    in = true;
                    break;
                }
            if (!in) {
                all_in = false;
                break;
            }
        }
        if (all_in) out.push_back(u);
    }
    return out;
}

unsigned long ideal_degree_dim(const Ideal& I, unsigned d, const MonomialOrder& order,
                               const BuchbergerCaps& caps) {
    const GroebnerBasis& gb = cached_groebner(I, order, caps);
    unsigned long count = 0;
    for (const auto& m : monomials_of_degree(I.ring()->nvars(), d, order))
        if (divisible_by_any(m, gb.basis())) ++count;
    return count;
}

} // namespace permv
