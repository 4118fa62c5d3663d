#include "permv/groebner.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace permv {

namespace {

std::size_t approx_bytes(const Polynomial& p) {
    // exponent vector + coefficient bookkeeping, rough but monotone
    return p.terms().size() * (p.ring()->nvars() * sizeof(unsigned) + 48) + 64;
}

Polynomial normal_form_counted(const Polynomial& f, std::span<const Polynomial> basis,
                               std::size_t* steps, const BuchbergerCaps* caps) {
    const FieldSpec& field = f.ring()->field();
    const MonomialOrder& order = f.order();
    Polynomial r = f;
    std::size_t pos = 0; // terms before pos are irreducible for good
    while (pos < r.terms().size()) {
        const Term& t = r.terms()[pos];
        const Polynomial* reducer = nullptr;
        for (const auto& b : basis) {
            if (!b.is_zero() && b.leading_monomial().divides(t.mono)) {
                reducer = &b;
                break;
            }
        }
        if (reducer == nullptr) {
            ++pos;
            continue;
        }
        mpq_class c = field.div(t.coeff, reducer->leading_coeff());
        Monomial shift = t.mono / reducer->leading_monomial();
        r = r - reducer->times_term(c, shift);
        if (steps != nullptr) {
            ++*steps;
            if (caps != nullptr && *steps > caps->max_pair_reductions)
                throw cap_exceeded("cap exceeded: " + std::to_string(caps->max_pair_reductions) +
                                   " reduction steps");
        }
        (void)order;
    }
    return r;
}

struct PairEntry {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
    std::size_t seq;
};

} // namespace

bool GroebnerBasis::contains_one() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw domain_error("s_polynomial of the zero polynomial");
    if (!same_ring(f.ring(), g.ring()) || f.order() != g.order())
        throw ring_mismatch("s_polynomial operands disagree on ring or order");
    const FieldSpec& field = f.ring()->field();
    Monomial lcm = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial left = f.times_term(field.inv(f.leading_coeff()), lcm / f.leading_monomial());
    Polynomial right = g.times_term(field.inv(g.leading_coeff()), lcm / g.leading_monomial());
    return left - right;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
    return normal_form_counted(f, basis, nullptr, nullptr);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_ring(f.ring(), gb.source().ring()))
        throw ring_mismatch("normal_form operand from a different ring");
    Polynomial g = f.with_order(gb.order());
    return normal_form_counted(g, gb.basis(), nullptr, nullptr);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerCaps& caps) {
    if (ideal.ring()->nvars() == 0) throw domain_error("buchberger over an empty ring");

    std::vector<Polynomial> G;
    std::size_t bytes = 0;
    for (const auto& g : ideal.generators()) {
        Polynomial h = g.with_order(order).monic();
        bytes += approx_bytes(h);
        G.push_back(std::move(h));
    }

    auto pair_less = [&order](const PairEntry& a, const PairEntry& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.seq < b.seq;
    };
    std::multiset<PairEntry, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> treated;
    std::size_t seq = 0;

    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (G[i].leading_monomial().coprime(G[k].leading_monomial())) {
                treated.emplace(i, k); // first Buchberger criterion
                continue;
            }
            if (seq >= caps.max_pair_reductions)
                throw cap_exceeded("cap exceeded: more than " +
                                   std::to_string(caps.max_pair_reductions) + " S-pairs");
            Monomial lcm = G[i].leading_monomial().lcm(G[k].leading_monomial());
            unsigned deg = lcm.degree();
            queue.insert(PairEntry{i, k, std::move(lcm), deg, seq++});
        }
    };
    for (std::size_t k = 0; k < G.size(); ++k) add_pairs_for(k);

    std::size_t reductions = 0;
    while (!queue.empty()) {
        PairEntry p = *queue.begin();
        queue.erase(queue.begin());
        if (treated.count({p.i, p.j})) continue;

        // chain criterion
        bool skip = false;
        for (std::size_t l = 0; l < G.size() && !skip; ++l) {
            if (l == p.i || l == p.j) continue;
            if (!G[l].leading_monomial().divides(p.lcm)) continue;
            auto key_il = std::minmax(p.i, l);
            auto key_jl = std::minmax(p.j, l);
            if (treated.count({key_il.first, key_il.second}) &&
                treated.count({key_jl.first, key_jl.second}))
                skip = true;
        }
        treated.emplace(p.i, p.j);
        if (skip) continue;

        Polynomial h = normal_form_counted(s_polynomial(G[p.i], G[p.j]), G, &reductions, &caps);
        ++reductions;
        if (reductions > caps.max_pair_reductions)
            throw cap_exceeded("cap exceeded: " + std::to_string(caps.max_pair_reductions) +
                               " pair reductions");
        if (h.is_zero()) continue;
        h = h.monic();
        bytes += approx_bytes(h);
        if (bytes > caps.max_basis_bytes)
            throw cap_exceeded("cap exceeded: basis size beyond " +
                               std::to_string(caps.max_basis_bytes) + " bytes");
        G.push_back(std::move(h));
        add_pairs_for(G.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> removed(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (removed[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || removed[j]) continue;
            if (G[j].leading_monomial().divides(G[i].leading_monomial()) &&
                !(G[i].leading_monomial() == G[j].leading_monomial() && j > i)) {
                removed[i] = true;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!removed[i]) minimal.push_back(G[i]);

    // interreduce tails
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form_counted(minimal[i], others, nullptr, nullptr);
            if (r != minimal[i]) {
                minimal[i] = r.monic();
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&order](const Polynomial& a, const Polynomial& b) {
        unsigned da = a.leading_monomial().degree(), db = b.leading_monomial().degree();
        if (da != db) return da < db;
        return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis(std::move(minimal), order, ideal);
}

const GroebnerBasis& cached_groebner(const Ideal& ideal, const MonomialOrder& order,
                                     const BuchbergerCaps& caps) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<GroebnerBasis>> cache;

    std::ostringstream key;
    key << ideal.ring()->field().characteristic() << '|';
    for (const auto& v : ideal.ring()->variables()) key << v << ',';
    key << '|';
    for (unsigned v : order.priority()) key << v << ',';
    key << '#' << order.elim_block_size() << '|';
    std::vector<std::string> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    std::sort(gens.begin(), gens.end());
    for (const auto& s : gens) key << s << ';';

    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key.str());
        if (it != cache.end()) return *it->second;
    }
    auto gb = std::make_unique<GroebnerBasis>(buchberger(ideal, order, caps));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, _] = cache.emplace(key.str(), std::move(gb));
    return *it->second;
}

GroebnerCheck is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
    GroebnerCheck result;
    std::vector<Polynomial> G;
    for (const auto& g : gens) {
        if (g.is_zero()) throw domain_error("is_groebner_basis: zero generator");
        G.push_back(g.with_order(order));
    }
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].leading_monomial().coprime(G[j].leading_monomial())) continue;
            Polynomial r = normal_form(s_polynomial(G[i], G[j]), G);
            if (!r.is_zero()) {
                result.ok = false;
                result.failing_pair = {i, j};
                return result;
            }
        }
    }
    result.ok = true;
    return result;
}

Ideal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Polynomial> monos;
    for (const auto& g : gb.basis())
        monos.push_back(Polynomial::from_terms(gb.source().ring(), gb.order(),
                                               {Term{1, g.leading_monomial()}}));
    return Ideal(gb.source().ring(), std::move(monos));
}

bool member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order,
            const BuchbergerCaps& caps) {
    if (f.is_zero()) return true;
    const GroebnerBasis& gb = cached_groebner(ideal, order, caps);
    return normal_form(f, gb).is_zero();
}

} // namespace permv
