#ifndef PERMV_MONOMIAL_HPP
#define PERMV_MONOMIAL_HPP

#include <cstddef>
#include <vector>

#include "permv/errors.hpp"

namespace permv {

// Exponent vector over a fixed ring; index i is the exponent of variable i.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exp_(std::move(exponents)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t nvars() const { return exp_.size(); }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned& operator[](std::size_t i) { return exp_[i]; }
    const std::vector<unsigned>& exponents() const { return exp_; }

    unsigned degree() const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // Exact division; throws domain_error if other does not divide *this.
    Monomial operator/(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
    bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

  private:
    std::vector<unsigned> exp_;
};

// Lexicographic order induced by a variable-priority permutation (highest
// first). An optional leading prefix is flagged as an elimination block;
// under pure lex with block variables first, any monomial containing a block
// variable already exceeds every monomial that does not, so the block is
// metadata for contraction logic rather than a separate comparison rule.
class MonomialOrder {
  public:
    MonomialOrder() = default;

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder lex(std::vector<unsigned> priority, std::size_t elim_block = 0);

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    const std::vector<unsigned>& priority() const { return priority_; }
    std::size_t elim_block_size() const { return elim_; }
    std::size_t nvars() const { return priority_.size(); }

    bool operator==(const MonomialOrder& other) const {
        return priority_ == other.priority_ && elim_ == other.elim_;
    }
    bool operator!=(const MonomialOrder& other) const { return !(*this == other); }

  private:
    std::vector<unsigned> priority_;
    std::size_t elim_ = 0;
};

} // namespace permv

#endif
