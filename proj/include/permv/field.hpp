#ifndef PERMV_FIELD_HPP
#define PERMV_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "permv/errors.hpp"

namespace permv {

// Coefficient field: the rationals (characteristic 0) or the prime field
// F_p. Elements are carried as mpq_class values; over F_p every element is
// an integer representative in [0, p).
class FieldSpec {
  public:
    explicit FieldSpec(unsigned long characteristic = 0);

    unsigned long characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    // Reduce an arbitrary rational to the canonical representative.
    // Throws domain_error if the denominator vanishes mod p.
    mpq_class normalize(const mpq_class& v) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;

    // Parses "int" or "int/nat".
    mpq_class from_string(const std::string& text) const;
    std::string to_string(const mpq_class& v) const;

    bool operator==(const FieldSpec& other) const { return char_ == other.char_; }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  private:
    unsigned long char_;
};

} // namespace permv

#endif
