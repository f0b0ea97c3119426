#include "cayleyq/parse.hpp"

#include <cctype>
#include <string>

#include "cayleyq/error.hpp"

namespace cayleyq {

namespace {

class Parser {
public:
    Parser(std::string_view s, ParseLimits lim) : s_(s), lim_(lim) {}

    RatFunc elem() {
        skip();
        RatFunc out;
        if (peek() == '(') {
            ++pos_;
            Poly num = poly();
            expect(')');
            out = maybe_denominator(num);
        } else {
            const std::size_t start = pos_;
            std::size_t terms = 0;
            Poly num = poly(&terms);
            if (peek() == '/' && terms > 1)
                throw ParseError("ambiguous numerator: parenthesize a multi-term numerator", start);
            out = maybe_denominator(num);
        }
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return out;
    }

private:
    RatFunc maybe_denominator(const Poly& num) {
        if (peek() != '/') return RatFunc(num);
        ++pos_;
        expect('(');
        const std::size_t at = pos_;
        Poly den = poly();
        expect(')');
        if (den.is_zero()) throw ParseError("division by the zero polynomial", at);
        return RatFunc(num, den);
    }

    Poly poly(std::size_t* terms = nullptr) {
        Poly out;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        std::size_t count = 0;
        for (;;) {
            Poly m = mono();
            ++count;
            out += negate ? -m : m;
            const char c = peek();
            if (c == '+' || c == '-') {
                negate = c == '-';
                ++pos_;
                continue;
            }
            break;
        }
        if (terms) *terms = count;
        return out;
    }

    Poly mono() {
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Rat coeff = 1;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = rat();
            if (peek() != '*') return Poly(negate ? -coeff : coeff);
            ++pos_;
            if (peek() != 'e') throw ParseError("expected 'e' after '*'", pos_);
        } else if (c != 'e') {
            throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
                             pos_);
        }
        ++pos_;  // 'e'
        long k = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            const mpz_class exp = digits();
            if (exp > lim_.max_degree)
                throw ParseError("exponent exceeds the degree limit of " + std::to_string(lim_.max_degree), at);
            k = exp.get_si();
        }
        return Poly::monomial(negate ? -coeff : coeff, static_cast<std::size_t>(k));
    }

    Rat rat() {
        const mpz_class num = digits();
        // A '/' directly followed by digits belongs to the rational; before
        // '(' it is the fraction bar of elem.
        const std::size_t save = pos_;
        if (peek() == '/') {
            ++pos_;
            skip();
            if (std::isdigit(static_cast<unsigned char>(cur()))) {
                const std::size_t at = pos_;
                const mpz_class den = digits();
                if (den == 0) throw ParseError("zero denominator", at);
                return Rat(num, den);
            }
            pos_ = save;
        }
        return Rat(num);
    }

    mpz_class digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    char peek() {
        skip();
        return cur();
    }
    char cur() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string_view s_;
    ParseLimits lim_;
    std::size_t pos_ = 0;
};

void append_term(std::string& out, const Rat& c, std::size_t k) {
    const bool neg = c.sign() < 0;
    if (out.empty()) {
        if (neg) out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    const Rat a = c.abs();
    if (k == 0) {
        out += a.str();
        return;
    }
    if (!a.is_one()) out += a.str() + "*";
    out += 'e';
    if (k > 1) out += "^" + std::to_string(k);
}

}  // namespace

RatFunc parse_elem(std::string_view text, ParseLimits limits) { return Parser(text, limits).elem(); }

Rat parse_rat(std::string_view text) {
    const RatFunc x = parse_elem(text);
    if (!x.is_constant()) throw ParseError("expected a rational constant, got '" + x.str() + "'", 0);
    return x.constant_value();
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) append_term(out, c_[k], k);
    return out;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::size_t terms = 0;
    for (const auto& c : num_.coeffs()) terms += c.is_zero() ? 0 : 1;
    const std::string n = num_.str();
    return (terms == 1 ? n : "(" + n + ")") + "/(" + den_.str() + ")";
}

}  // namespace cayleyq
