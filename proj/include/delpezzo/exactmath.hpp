#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dp {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// num/den with any sign on den; den must be nonzero.
Rational make_rational(const BigInt &num, const BigInt &den);

// Integer polynomial in the family parameter n. coeffs()[k] multiplies n^k,
// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long long c);
    IntPoly(const BigInt &c);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly linear(long long slope, long long offset);
    static IntPoly var();

    const std::vector<BigInt> &coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    BigInt coeff(std::size_t k) const;
    const BigInt &lead() const;
    BigInt constant_term() const { return coeff(0); }

    BigInt operator()(const BigInt &n) const;
    Rational operator()(const Rational &n) const;

    IntPoly operator-() const;
    IntPoly &operator+=(const IntPoly &o);
    IntPoly &operator-=(const IntPoly &o);
    IntPoly &operator*=(const IntPoly &o);

    friend IntPoly operator+(IntPoly a, const IntPoly &b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly &b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly &b) { return a *= b; }
    friend bool operator==(const IntPoly &a, const IntPoly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly &a, const IntPoly &b) { return !(a == b); }

private:
    void trim();
    std::vector<BigInt> c_;
};

BigInt poly_eval(const IntPoly &p, const BigInt &n);

// q(m) = p(m + k)
IntPoly poly_shift(const IntPoly &p, const BigInt &k);
IntPoly derivative(const IntPoly &p);

// Non-negative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly &p);
// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly &p);

struct PseudoDivision {
    IntPoly quotient;
    IntPoly remainder;
    BigInt scale; // scale * a = quotient * b + remainder
};
PseudoDivision pseudo_divide(const IntPoly &a, const IntPoly &b);

// Exact quotient in Z[n]; false when b does not divide a there.
bool divide_exact(const IntPoly &a, const IntPoly &b, IntPoly &quotient);

IntPoly poly_gcd(const IntPoly &p, const IntPoly &q);

// Squarefree part, primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly &p);

std::string to_string(const IntPoly &p);

struct PoleError : std::domain_error {
    PoleError(BigInt root, const std::string &what);
    BigInt root;
};

// Normalized quotient of integer polynomials: num and den are coprime in
// Z[n] and den has positive leading coefficient. Equality is structural.
class RatFn {
public:
    RatFn() : den_(1) {}
    RatFn(long long c) : num_(c), den_(1) {}
    RatFn(const IntPoly &p) : num_(p), den_(1) {}
    RatFn(IntPoly num, IntPoly den);

    const IntPoly &num() const { return num_; }
    const IntPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == IntPoly(1); }

    // Throws PoleError when den(n) = 0.
    Rational operator()(const BigInt &n) const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn &a, const RatFn &b);
    friend RatFn operator-(const RatFn &a, const RatFn &b);
    friend RatFn operator*(const RatFn &a, const RatFn &b);
    friend RatFn operator/(const RatFn &a, const RatFn &b);
    friend bool operator==(const RatFn &a, const RatFn &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn &a, const RatFn &b) { return !(a == b); }

private:
    IntPoly num_, den_;
};

enum class ArithOp { add, sub, mul, div };
RatFn ratfn_arith(const RatFn &a, const RatFn &b, ArithOp op);
Rational ratfn_eval(const RatFn &f, const BigInt &n);

// Renders with factors from hints pulled out of numerator and denominator,
// e.g. "(3n)/((3n-2)(6n-5))". Without hints the polynomials print whole.
std::string to_string(const RatFn &f, const std::vector<IntPoly> &hints = {});
std::string to_string(const Rational &q);

struct ParseError : std::invalid_argument {
    ParseError(const std::string &what, std::size_t pos);
    std::size_t pos;
};

// Grammar: + - * / ^int, parentheses, integer literals, the variable n,
// and implicit multiplication ("3n", "2(7n+1)", "(3n-2)(6n-5)").
RatFn parse_ratfn(std::string_view text);
IntPoly parse_poly(std::string_view text);

} // namespace dp
