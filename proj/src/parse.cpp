#include "superirr/parse.hpp"

#include <cctype>

namespace superirr {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    RatPoly run() {
        RatPoly v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer nat() {
        skip_ws();
        if (!at_digit()) fail("expected an integer");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(text_.substr(start, pos_ - start));
    }

    RatPoly expr() {
        RatPoly v = term();
        while (true) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    RatPoly term() {
        RatPoly v = factor();
        while (accept('*')) v = v * factor();
        return v;
    }

    RatPoly factor() {
        RatPoly base = atom();
        if (accept('^')) {
            skip_ws();
            if (!at_digit()) fail("expected a nonnegative integer exponent");
            Integer e = nat();
            if (e > 1000000) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    RatPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return RatPoly::x();
        }
        if (c == '(') {
            ++pos_;
            RatPoly v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = nat();
            if (accept('/')) {
                skip_ws();
                if (!at_digit()) fail("expected an integer denominator");
                Integer den = nat();
                if (den == 0) fail("zero denominator");
                return RatPoly::constant(make_rational(num, den));
            }
            return RatPoly::constant(Rational(num));
        }
        fail("expected a number, 'x', '(' or '-'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

std::string render(const RatPoly& f) { return f.to_string(); }
std::string render(const IntPoly& f) { return f.to_string(); }

}  // namespace superirr
