#include "permv/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace permv {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    m.exp_[index] = power;
    return m;
}

unsigned Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0u);
}

bool Monomial::is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw domain_error("non-exact monomial division");
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= other.exp_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    return r;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    std::vector<unsigned> p(nvars);
    std::iota(p.begin(), p.end(), 0u);
    return lex(std::move(p), 0);
}

MonomialOrder MonomialOrder::lex(std::vector<unsigned> priority, std::size_t elim_block) {
    std::vector<bool> seen(priority.size(), false);
    for (unsigned v : priority) {
        if (v >= priority.size() || seen[v])
            throw domain_error("monomial order priority is not a permutation");
        seen[v] = true;
    }
    if (elim_block > priority.size())
        throw domain_error("elimination block exceeds variable count");
    MonomialOrder o;
    o.priority_ = std::move(priority);
    o.elim_ = elim_block;
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (unsigned v : priority_) {
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
}

} // namespace permv
