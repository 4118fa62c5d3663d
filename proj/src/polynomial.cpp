#include "permv/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace permv {

namespace {

void check_same_context(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw ring_mismatch("polynomials from different rings");
    if (a.order() != b.order()) throw ring_mismatch("polynomials under different monomial orders");
}

} // namespace

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder order, std::vector<Term> terms) {
    const FieldSpec& field = ring->field();
    std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
        return order.compare(a.mono, b.mono) > 0;
    });
    Polynomial p(std::move(ring), std::move(order));
    for (auto& t : terms) {
        mpq_class c = field.normalize(t.coeff);
        if (c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            mpq_class merged = field.add(p.terms_.back().coeff, c);
            if (merged == 0)
                p.terms_.pop_back();
            else
                p.terms_.back().coeff = merged;
        } else {
            p.terms_.push_back(Term{std::move(c), std::move(t.mono)});
        }
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw domain_error("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_context(*this, other);
    const FieldSpec& field = ring_->field();
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = order_.compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(other.terms_[j++]);
        } else {
            mpq_class s = field.add(terms_[i].coeff, other.terms_[j].coeff);
            if (s != 0) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    const FieldSpec& field = ring_->field();
    for (auto& t : r.terms_) t.coeff = field.neg(t.coeff);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_context(*this, other);
    const FieldSpec& field = ring_->field();
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return order_.compare(a, b) > 0;
    };
    std::map<Monomial, mpq_class, decltype(cmp)> acc(cmp);
    for (const auto& ta : terms_) {
        for (const auto& tb : other.terms_) {
            Monomial m = ta.mono * tb.mono;
            mpq_class c = field.mul(ta.coeff, tb.coeff);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second = field.add(it->second, c);
        }
    }
    Polynomial r(ring_, order_);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back(Term{c, m});
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    if (order_ == other.order_) {
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
                return false;
        return true;
    }
    return *this == other.with_order(order_);
}

Polynomial Polynomial::scale(const mpq_class& c) const {
    const FieldSpec& field = ring_->field();
    mpq_class cn = field.normalize(c);
    Polynomial r(ring_, order_);
    if (cn == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, cn);
    return r;
}

Polynomial Polynomial::times_term(const mpq_class& c, const Monomial& m) const {
    const FieldSpec& field = ring_->field();
    mpq_class cn = field.normalize(c);
    Polynomial r(ring_, order_);
    if (cn == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(Term{field.mul(t.coeff, cn), t.mono * m});
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scale(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::normalized_display() const {
    if (terms_.empty()) return *this;
    if (!ring_->field().is_rational()) return monic();
    // Clear denominators, strip integer content, make the lead positive.
    mpz_class den_lcm = 1;
    for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    mpz_class content = 0;
    for (const auto& t : terms_) {
        mpz_class num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    mpq_class factor(den_lcm, content);
    factor.canonicalize();
    if (terms_.front().coeff < 0) factor = -factor;
    return scale(factor);
}

Polynomial Polynomial::specialize(const std::map<std::size_t, mpq_class>& assignment) const {
    const FieldSpec& field = ring_->field();
    for (const auto& [idx, _] : assignment)
        if (idx >= ring_->nvars()) throw domain_error("specialize: variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        Monomial m = t.mono;
        bool dead = false;
        for (const auto& [idx, val] : assignment) {
            unsigned e = m[idx];
            if (e == 0) continue;
            mpq_class v = field.normalize(val);
            if (v == 0) {
                dead = true;
                break;
            }
            for (unsigned k = 0; k < e; ++k) c = field.mul(c, v);
            m[idx] = 0;
        }
        if (!dead) out.push_back(Term{std::move(c), std::move(m)});
    }
    return from_terms(ring_, order_, std::move(out));
}

std::string monomial_to_string(const Monomial& m, const RingContext& ring) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        os << ring.var_name(i);
        if (m[i] > 1) os << '^' << m[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    Polynomial p = normalized_display();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms_) {
        mpq_class c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? '-' : '+');
            if (c < 0) c = -c;
        }
        if (t.mono.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << '*';
            os << monomial_to_string(t.mono, *ring_);
        }
        first = false;
    }
    return os.str();
}

} // namespace permv
