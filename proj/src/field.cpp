#include "permv/field.hpp"

#include <cctype>

namespace permv {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec::FieldSpec(unsigned long characteristic) : char_(characteristic) {
    if (char_ != 0 && !is_prime(char_))
        throw domain_error("field characteristic must be 0 or a prime, got " +
                           std::to_string(char_));
}

mpq_class FieldSpec::normalize(const mpq_class& v) const {
    if (char_ == 0) {
        mpq_class r = v;
        r.canonicalize();
        return r;
    }
    mpq_class r = v;
    r.canonicalize();
    mpz_class p(static_cast<unsigned long>(char_));
    mpz_class den = r.get_den();
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    if (den != 1) {
        mpz_class dinv;
        mpz_class dmod = den % p;
        if (dmod < 0) dmod += p;
        if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
            throw domain_error("denominator not invertible modulo " + std::to_string(char_));
        num = (num * dinv) % p;
    }
    return mpq_class(num);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
    return normalize(a + b);
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
    return normalize(a - b);
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
    return normalize(a * b);
}

mpq_class FieldSpec::neg(const mpq_class& a) const {
    return normalize(-a);
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
    if (a == 0) throw domain_error("division by zero in coefficient field");
    if (char_ == 0) return mpq_class(1) / a;
    mpz_class p(static_cast<unsigned long>(char_));
    mpz_class v = normalize(a).get_num();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw domain_error("element not invertible modulo " + std::to_string(char_));
    return mpq_class(r);
}

mpq_class FieldSpec::div(const mpq_class& a, const mpq_class& b) const {
    return mul(a, inv(b));
}

mpq_class FieldSpec::from_string(const std::string& text) const {
    if (text.empty()) throw parse_error("empty coefficient");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
            throw parse_error("malformed coefficient: " + text);
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw parse_error("malformed coefficient: " + text);
    if (v.get_den() == 0) throw parse_error("zero denominator in coefficient: " + text);
    if (char_ != 0 && v.get_den() % mpz_class(static_cast<unsigned long>(char_)) == 0)
        throw parse_error("coefficient denominator divisible by " + std::to_string(char_));
    return normalize(v);
}

std::string FieldSpec::to_string(const mpq_class& v) const {
    return v.get_str();
}

} // namespace permv
