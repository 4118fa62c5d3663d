#include <cctype>

#include "permv/polynomial.hpp"

namespace permv {

namespace {

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of polynomial text");
        return s_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error("expected digits at position " + std::to_string(start));
        return s_.substr(start, pos_ - start);
    }
    // var := [xy](_\d+){1,2}
    std::string var_name() {
        skip_ws();
        std::size_t start = pos_;
        char head = get();
        if (head != 'x' && head != 'y') throw parse_error("expected variable at position " + std::to_string(start));
        std::string name(1, head);
        int groups = 0;
        while (groups < 2 && pos_ < s_.size() && s_[pos_] == '_') {
            ++pos_;
            name += '_';
            name += digits();
            ++groups;
        }
        if (groups == 0) throw parse_error("malformed variable at position " + std::to_string(start));
        return name;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& order) {
    Lexer lex(text);
    const FieldSpec& field = ring->field();
    std::vector<Term> terms;

    bool first = true;
    while (true) {
        if (lex.eof()) {
            if (first) throw parse_error("empty polynomial text");
            break;
        }
        mpq_class sign = 1;
        if (lex.accept('+')) {
            // explicit plus
        } else if (lex.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms");
        }
        first = false;

        mpq_class coeff = sign;
        Monomial mono(ring->nvars());
        bool saw_factor = false;

        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.digits();
            if (lex.accept('/')) num += "/" + lex.digits();
            coeff = field.mul(coeff, field.from_string(num));
            if (!lex.accept('*')) {
                terms.push_back(Term{coeff, mono});
                continue;
            }
        }
        while (true) {
            std::string name = lex.var_name();
            auto idx = ring->var_index(name);
            if (!idx) throw parse_error("unknown variable: " + name);
            unsigned e = 1;
            if (lex.accept('^')) e = unsigned(std::stoul(lex.digits()));
            mono[*idx] += e;
            saw_factor = true;
            if (!lex.accept('*')) break;
        }
        if (!saw_factor) throw parse_error("expected a factor");
        terms.push_back(Term{coeff, mono});
    }
    return Polynomial::from_terms(ring, order, std::move(terms));
}

} // namespace permv
