#include "delpezzo/exactmath.hpp"

#include <cctype>

namespace dp {

ParseError::ParseError(const std::string &what, std::size_t p)
    : std::invalid_argument(what + " at offset " + std::to_string(p)), pos(p)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFn parse()
    {
        skip();
        if (i_ == s_.size())
            throw ParseError("empty expression", i_);
        RatFn r = expr();
        skip();
        if (i_ != s_.size())
            throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return r;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    // U+2212 MINUS SIGN is read as '-'.
    char peek()
    {
        skip();
        if (i_ >= s_.size())
            return '\0';
        if (s_.compare(i_, 3, "\xE2\x88\x92") == 0)
            return '-';
        return s_[i_];
    }

    void take()
    {
        i_ += s_.compare(i_, 3, "\xE2\x88\x92") == 0 ? 3 : 1;
    }

    bool starts_atom()
    {
        char c = peek();
        return c == '(' || c == 'n' || std::isdigit(static_cast<unsigned char>(c));
    }

    RatFn expr()
    {
        RatFn r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                take();
                r = r + term();
            } else if (c == '-') {
                take();
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RatFn term()
    {
        RatFn r = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                take();
                r = r * unary();
            } else if (c == '/') {
                std::size_t at = i_;
                take();
                RatFn d = unary();
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                r = r / d;
            } else if (starts_atom()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    RatFn unary()
    {
        char c = peek();
        if (c == '-') {
            take();
            return -unary();
        }
        if (c == '+') {
            take();
            return unary();
        }
        return power();
    }

    RatFn power()
    {
        RatFn base = atom();
        if (peek() != '^')
            return base;
        take();
        std::size_t at = i_;
        RatFn e = peek() == '(' ? atom() : RatFn(IntPoly(integer()));
        if (!e.is_polynomial() || !e.num().is_constant() || e.num().constant_term() < 0)
            throw ParseError("exponent must be a non-negative integer", at);
        BigInt k = e.num().constant_term();
        if (k > 4096)
            throw ParseError("exponent too large", at);
        RatFn r(1);
        for (BigInt j = 0; j < k; ++j)
            r = r * base;
        return r;
    }

    BigInt integer()
    {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            throw ParseError("expected integer", start);
        return BigInt(std::string(s_.substr(start, i_ - start)));
    }

    RatFn atom()
    {
        char c = peek();
        if (c == '(') {
            take();
            RatFn r = expr();
            if (peek() != ')')
                throw ParseError("expected ')'", i_);
            take();
            return r;
        }
        if (c == 'n') {
            take();
            return RatFn(IntPoly::var());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFn(IntPoly(integer()));
        if (c == '\0')
            throw ParseError("unexpected end of expression", i_);
        throw ParseError(std::string("unexpected '") + c + "'", i_);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

RatFn parse_ratfn(std::string_view text) { return Parser(text).parse(); }

IntPoly parse_poly(std::string_view text)
{
    RatFn r = parse_ratfn(text);
    if (!r.is_polynomial())
        throw ParseError("expected a polynomial in n", 0);
    return r.num();
}

} // namespace dp
