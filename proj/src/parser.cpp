#include "recip/parser.hpp"

#include <cctype>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {
namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly run() {
        skip_ws();
        BiPoly e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("expected operator or end of input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(pos_ + 1, expected);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    BiPoly expr() {
        BiPoly acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    BiPoly factor() {
        if (eat('-')) return -factor();
        BiPoly a = atom();
        if (eat('^')) {
            unsigned long e = exponent();
            return a.pow(static_cast<long>(e));
        }
        return a;
    }

    BiPoly atom() {
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::var_x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::var_y();
        }
        if (c == '(') {
            ++pos_;
            BiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        fail("expected 'x', 'y', a number, '-' or '('");
    }

    mpz_class integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer literal");
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return mpz_class(digits);
    }

    BiPoly number() {
        mpz_class n = integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t dpos = pos_;
            mpz_class d = integer();
            if (d == 0) throw SyntaxError(dpos + 1, "denominator must be nonzero");
            return BiPoly::constant(Rat(n, d));
        }
        return BiPoly::constant(Rat(n));
    }

    unsigned long exponent() {
        skip_ws();
        std::size_t start = pos_;
        mpz_class e = integer();
        if (e >= mpz_class(1) << 32)
            throw SyntaxError(start + 1, "exponent must be below 2^32");
        return e.get_ui();
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string rat_str(const Rat& r) { return r.str(); }

} // namespace

BiPoly parse_poly(const std::string& src) { return Parser(src).run(); }

std::string format_poly(const BiPoly& p) {
    if (p.zero()) return "0";
    // graded-lex, x before y: total degree descending, then x-power descending
    std::vector<std::pair<ExpPair, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        long dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool has_var = e.first > 0 || e.second > 0;
        bool printed_coeff = false;
        if (!has_var || !a.is_one()) {
            out << rat_str(a);
            printed_coeff = true;
        }
        if (e.first > 0) {
            if (printed_coeff) out << "*";
            out << "x";
            if (e.first > 1) out << "^" << e.first;
            printed_coeff = true;
        }
        if (e.second > 0) {
            if (printed_coeff) out << "*";
            out << "y";
            if (e.second > 1) out << "^" << e.second;
        }
    }
    return out.str();
}

} // namespace recip
