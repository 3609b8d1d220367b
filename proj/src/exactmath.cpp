#include "delpezzo/exactmath.hpp"

#include <algorithm>
#include <utility>

namespace dp {

namespace mp = boost::multiprecision;

IntPoly::IntPoly(long long c)
{
    if (c != 0)
        c_.push_back(BigInt(c));
}

IntPoly::IntPoly(const BigInt &c)
{
    if (c != 0)
        c_.push_back(c);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::linear(long long slope, long long offset)
{
    return IntPoly(std::vector<BigInt>{BigInt(offset), BigInt(slope)});
}

IntPoly IntPoly::var() { return IntPoly(std::vector<BigInt>{0, 1}); }

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigInt IntPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

const BigInt &IntPoly::lead() const
{
    if (c_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

BigInt IntPoly::operator()(const BigInt &n) const
{
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

Rational IntPoly::operator()(const Rational &n) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * n + Rational(*it);
    return acc;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto &c : r.c_)
        c = -c;
    return r;
}

IntPoly &IntPoly::operator+=(const IntPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly &IntPoly::operator-=(const IntPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly &IntPoly::operator*=(const IntPoly &o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

BigInt poly_eval(const IntPoly &p, const BigInt &n) { return p(n); }

IntPoly poly_shift(const IntPoly &p, const BigInt &k)
{
    // Horner in the shifted variable: q = (...(c_d)(m+k) + c_{d-1})...
    IntPoly q;
    IntPoly step(std::vector<BigInt>{k, 1});
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        q = q * step + IntPoly(*it);
    return q;
}

IntPoly derivative(const IntPoly &p)
{
    const auto &c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<BigInt> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        r[k - 1] = c[k] * static_cast<long long>(k);
    return IntPoly(std::move(r));
}

BigInt content(const IntPoly &p)
{
    BigInt g = 0;
    for (const auto &c : p.coeffs())
        g = mp::gcd(g, mp::abs(c));
    return g;
}

IntPoly primitive_part(const IntPoly &p)
{
    if (p.is_zero())
        return {};
    BigInt g = content(p);
    if (p.lead() < 0)
        g = -g;
    std::vector<BigInt> r = p.coeffs();
    for (auto &c : r)
        c /= g;
    return IntPoly(std::move(r));
}

static IntPoly monomial(const BigInt &c, int k)
{
    std::vector<BigInt> r(static_cast<std::size_t>(k) + 1);
    r.back() = c;
    return IntPoly(std::move(r));
}

PseudoDivision pseudo_divide(const IntPoly &a, const IntPoly &b)
{
    if (b.is_zero())
        throw std::domain_error("pseudo-division by the zero polynomial");
    PseudoDivision out{{}, a, 1};
    if (a.degree() < b.degree())
        return out;
    const BigInt &lb = b.lead();
    int k = a.degree() - b.degree() + 1;
    int steps = 0;
    while (!out.remainder.is_zero() && out.remainder.degree() >= b.degree()) {
        IntPoly s = monomial(out.remainder.lead(), out.remainder.degree() - b.degree());
        out.quotient = out.quotient * IntPoly(lb) + s;
        out.remainder = out.remainder * IntPoly(lb) - s * b;
        ++steps;
    }
    BigInt rest = mp::pow(lb, static_cast<unsigned>(k - steps));
    out.quotient *= IntPoly(rest);
    out.remainder *= IntPoly(rest);
    out.scale = mp::pow(lb, static_cast<unsigned>(k));
    return out;
}

bool divide_exact(const IntPoly &a, const IntPoly &b, IntPoly &quotient)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    IntPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigInt t, rem;
        mp::divide_qr(r.lead(), b.lead(), t, rem);
        if (rem != 0)
            return false;
        IntPoly s = monomial(t, r.degree() - b.degree());
        q += s;
        r -= s * b;
    }
    if (!r.is_zero())
        return false;
    quotient = std::move(q);
    return true;
}

IntPoly poly_gcd(const IntPoly &p, const IntPoly &q)
{
    if (p.is_zero() && q.is_zero())
        return {};
    if (p.is_zero())
        return q.lead() < 0 ? -q : q;
    if (q.is_zero())
        return p.lead() < 0 ? -p : p;
    BigInt c = mp::gcd(content(p), content(q));
    IntPoly a = primitive_part(p), b = primitive_part(q);
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_divide(a, b).remainder;
        a = std::move(b);
        b = primitive_part(r);
    }
    return IntPoly(c) * primitive_part(a);
}

IntPoly squarefree_part(const IntPoly &p)
{
    if (p.is_constant())
        return p.is_zero() ? IntPoly() : IntPoly(1);
    IntPoly g = poly_gcd(p, derivative(p)), q;
    divide_exact(primitive_part(p), primitive_part(g), q);
    return primitive_part(q);
}

std::string to_string(const IntPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    const auto &c = p.coeffs();
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt &a = c[static_cast<std::size_t>(k)];
        if (a == 0)
            continue;
        BigInt mag = mp::abs(a);
        if (a < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (k == 0 || mag != 1)
            s += mag.str();
        if (k >= 1)
            s += "n";
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s;
}

PoleError::PoleError(BigInt r, const std::string &what) : std::domain_error(what), root(std::move(r)) {}

RatFn::RatFn(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g != IntPoly(1)) {
        divide_exact(IntPoly(num_), g, num_);
        divide_exact(IntPoly(den_), g, den_);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational RatFn::operator()(const BigInt &n) const
{
    BigInt d = den_(n);
    if (d == 0)
        throw PoleError(n, "pole at n = " + n.str());
    return make_rational(num_(n), d);
}

RatFn RatFn::operator-() const
{
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn &a, const RatFn &b)
{
    if (a.den_ == b.den_)
        return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn &a, const RatFn &b) { return a + (-b); }

RatFn operator*(const RatFn &a, const RatFn &b)
{
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn &a, const RatFn &b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn ratfn_arith(const RatFn &a, const RatFn &b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw std::logic_error("unknown arithmetic operation");
}

Rational make_rational(const BigInt &num, const BigInt &den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

Rational ratfn_eval(const RatFn &f, const BigInt &n) { return f(n); }

std::string to_string(const Rational &q)
{
    if (mp::denominator(q) == 1)
        return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

struct Factored {
    BigInt unit;
    std::vector<std::pair<IntPoly, int>> factors;
};

Factored factor_with_hints(const IntPoly &p, const std::vector<IntPoly> &hints)
{
    Factored f;
    if (p.is_constant()) {
        f.unit = p.constant_term();
        return f;
    }
    f.unit = content(p);
    if (p.lead() < 0)
        f.unit = -f.unit;
    IntPoly rest = primitive_part(p);
    for (const auto &h : hints) {
        int e = 0;
        IntPoly q;
        while (!rest.is_constant() && rest.degree() >= h.degree() && divide_exact(rest, h, q)) {
            rest = q;
            ++e;
        }
        if (e > 0)
            f.factors.emplace_back(h, e);
    }
    if (!rest.is_constant())
        f.factors.emplace(f.factors.begin(), rest, 1);
    return f;
}

// bare is set when the result is a plain integer.
std::string group(const IntPoly &p, const std::vector<IntPoly> &hints, bool &bare)
{
    Factored f = factor_with_hints(p, hints);
    bare = f.factors.empty();
    if (bare)
        return f.unit.str();
    if (f.factors.size() == 1 && f.factors[0].second == 1)
        return to_string(IntPoly(f.unit) * f.factors[0].first);
    std::string s;
    if (f.unit == -1)
        s = "-";
    else if (f.unit != 1)
        s = f.unit.str();
    for (const auto &[q, e] : f.factors) {
        // a lone power of n needs no parentheses and goes first
        bool mono = e == 1 && std::count_if(q.coeffs().begin(), q.coeffs().end(),
                                             [](const BigInt &c) { return c != 0; }) == 1;
        if (mono) {
            s += to_string(q);
            continue;
        }
        s += "(" + to_string(q) + ")";
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string to_string(const RatFn &f, const std::vector<IntPoly> &hints)
{
    if (f.is_polynomial())
        return to_string(f.num());
    std::vector<IntPoly> h;
    for (const auto &x : hints) {
        if (x.is_constant())
            continue;
        IntPoly pp = primitive_part(x);
        if (std::find(h.begin(), h.end(), pp) == h.end())
            h.push_back(pp);
    }
    bool bare = false;
    std::string num = group(f.num(), h, bare);
    if (!bare)
        num = "(" + num + ")";
    std::string den = group(f.den(), h, bare);
    if (!bare)
        den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace dp
