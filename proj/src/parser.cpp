#include "qrs/parser.hpp"

#include <cctype>

namespace qrs {

namespace {

// Every parsed value is a FreeElement; scalars ride on the empty word.
FreeElement scalar(const Laurent& c) { return FreeElement::word(c, {}); }

// A FreeElement that is a pure scalar, or nullopt.
std::optional<Laurent> as_scalar(const FreeElement& x) {
    if (x.is_zero()) return Laurent();
    if (x.terms().size() == 1 && x.terms().begin()->first.empty())
        return x.terms().begin()->second;
    return std::nullopt;
}

class Parser {
  public:
    Parser(const std::string& text, const Presentation& p) : s_(text), p_(p) {}

    FreeElement run() {
        FreeElement x = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return x;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    FreeElement expr() {
        FreeElement acc;
        bool neg = eat('-');
        FreeElement t = term();
        acc += neg ? t.scaled(Laurent(-1)) : t;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    FreeElement term() {
        FreeElement acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    FreeElement factor() {
        FreeElement b = base();
        if (!eat('^')) return b;
        size_t at = pos_;
        long n = integer();
        if (n >= 0) {
            FreeElement acc = scalar(Laurent(1));
            for (long k = 0; k < n; ++k) acc = acc * b;
            return acc;
        }
        auto c = as_scalar(b);
        if (!c || !c->is_monomial())
            throw ParseError("negative power requires a scalar monomial base", at);
        Laurent inv = c->monomial_invert();
        Laurent acc(1);
        for (long k = 0; k < -n; ++k) acc = acc * inv;
        return scalar(acc);
    }

    FreeElement base() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FreeElement x = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar(rational());
        if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    long integer() {
        skip_ws();
        size_t at = pos_;
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("integer too large", at);
            ++pos_;
        }
        return neg ? -v : v;
    }

    Laurent rational() {
        long num = integer();
        if (!eat('/')) return Laurent(num);
        size_t at = pos_;
        long den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return Laurent(Rational(num, den));
    }

    FreeElement symbol() {
        size_t at = pos_;
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '\''))
            name += s_[pos_++];
        if (name == "r") return scalar(Laurent::rs(1, 0));
        if (name == "s") return scalar(Laurent::rs(0, 1));
        if (name == "Z'") name = "Zp";
        if (name == "X3'") name = "X3p";
        for (size_t g = 0; g < p_.ngens(); ++g)
            if (p_.names()[g] == name)
                return FreeElement::word(Laurent(1), {static_cast<int>(g)});
        try {
            return to_free(derived_element(name, p_).value);
        } catch (const UnknownName&) {
            throw UnknownSymbol(name, at);
        }
    }

    const std::string& s_;
    const Presentation& p_;
    size_t pos_ = 0;
};

}  // namespace

FreeElement parse(const std::string& text, const Presentation& p) {
    return Parser(text, p).run();
}

}  // namespace qrs
