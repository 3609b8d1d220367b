#include "delpezzo/certify.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dp {

namespace mp = boost::multiprecision;

namespace {

constexpr long long sweep_limit = 4096;

long long to_ll(const BigInt &v)
{
    if (v > BigInt(std::numeric_limits<long long>::max()) || v < BigInt(std::numeric_limits<long long>::min()))
        throw std::overflow_error("integer " + v.str() + " out of range");
    return static_cast<long long>(v);
}

int sign(const BigInt &v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<IntPoly> sturm_sequence(const IntPoly &p)
{
    std::vector<IntPoly> s{p, derivative(p)};
    while (!s.back().is_zero()) {
        const IntPoly &a = s[s.size() - 2];
        const IntPoly &b = s.back();
        if (b.is_constant())
            break;
        PseudoDivision d = pseudo_divide(a, b);
        IntPoly r = d.remainder;
        if (d.scale < 0)
            r = -r;
        if (r.is_zero())
            break;
        // keep the sign, drop the positive content
        BigInt c = content(r);
        std::vector<BigInt> k = r.coeffs();
        for (auto &x : k)
            x = -(x / c);
        s.emplace_back(std::move(k));
    }
    if (s.back().is_zero())
        s.pop_back();
    return s;
}

int variations(const std::vector<IntPoly> &seq, const BigInt &x)
{
    int v = 0, last = 0;
    for (const auto &p : seq) {
        int sg = sign(p(x));
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++v;
        last = sg;
    }
    return v;
}

// Collects every k in [a, b) such that the squarefree p has a root in (k, k+1].
void isolate(const std::vector<IntPoly> &seq, const BigInt &a, int va, const BigInt &b, int vb,
             std::vector<BigInt> &out)
{
    if (va == vb)
        return;
    if (b - a == 1) {
        out.push_back(a);
        return;
    }
    BigInt mid = a + (b - a) / 2;
    int vm = variations(seq, mid);
    isolate(seq, a, va, mid, vm, out);
    isolate(seq, mid, vm, b, vb, out);
}

std::vector<BigInt> root_cells(const IntPoly &p, const BigInt &a, const BigInt &b)
{
    std::vector<BigInt> out;
    if (p.is_constant() || a >= b)
        return out;
    auto seq = sturm_sequence(squarefree_part(p));
    isolate(seq, a, variations(seq, a), b, variations(seq, b), out);
    return out;
}

bool violates(const IntPoly &p, const BigInt &n, bool strict)
{
    BigInt v = p(n);
    return strict ? v <= 0 : v < 0;
}

Relation flip_for_sign(Relation r)
{
    switch (r) {
    case Relation::lt:
        return Relation::gt;
    case Relation::le:
        return Relation::ge;
    case Relation::ge:
        return Relation::le;
    case Relation::gt:
        return Relation::lt;
    default:
        return r;
    }
}

void check_poles(const RatFn &f, long long n0)
{
    if (f.den().is_constant())
        return;
    BigInt hi = std::max(BigInt(n0), cauchy_bound(f.den()));
    auto roots = integer_roots(f.den(), n0, to_ll(hi));
    if (!roots.empty())
        throw IllPosedClaim(roots.front(), "denominator " + to_string(f.den()) + " vanishes at n = " +
                                               std::to_string(roots.front()));
}

} // namespace

const char *to_string(Relation r)
{
    switch (r) {
    case Relation::lt:
        return "<";
    case Relation::le:
        return "<=";
    case Relation::eq:
        return "=";
    case Relation::ge:
        return ">=";
    case Relation::gt:
        return ">";
    }
    return "?";
}

const char *to_string(Verdict v) { return v == Verdict::holds ? "holds" : "fails"; }

const char *to_string(Method m)
{
    switch (m) {
    case Method::shift_nonneg_coefficients:
        return "shift-nonneg-coefficients";
    case Method::root_bound_pointwise:
        return "root-bound-pointwise";
    case Method::identity:
        return "identity";
    case Method::counterexample:
        return "counterexample";
    case Method::point_evaluation:
        return "point-evaluation";
    case Method::residue_case_split:
        return "residue-case-split";
    }
    return "?";
}

bool compare(const Rational &a, Relation r, const Rational &b)
{
    switch (r) {
    case Relation::lt:
        return a < b;
    case Relation::le:
        return a <= b;
    case Relation::eq:
        return a == b;
    case Relation::ge:
        return a >= b;
    case Relation::gt:
        return a > b;
    }
    return false;
}

IllPosedClaim::IllPosedClaim(long long r, const std::string &what) : std::domain_error(what), root(r) {}

BigInt cauchy_bound(const IntPoly &p)
{
    if (p.is_constant())
        return 1;
    BigInt lead = mp::abs(p.lead()), best = 0;
    for (int k = 0; k < p.degree(); ++k) {
        BigInt a = mp::abs(p.coeff(static_cast<std::size_t>(k)));
        BigInt q = (a + lead - 1) / lead;
        best = std::max(best, q);
    }
    return best + 1;
}

std::vector<long long> integer_roots(const IntPoly &p, long long lo, long long hi)
{
    if (p.is_zero())
        throw std::domain_error("integer roots of the zero polynomial");
    std::vector<long long> out;
    if (p.is_constant() || lo > hi)
        return out;
    BigInt b = cauchy_bound(p);
    BigInt neg = -b;
    BigInt a0 = std::max(BigInt(lo), neg), b0 = std::min(BigInt(hi), b);
    if (a0 > b0)
        return out;
    for (const auto &k : root_cells(p, a0 - 1, b0))
        if (p(k + 1) == 0)
            out.push_back(to_ll(k + 1));
    return out;
}

std::optional<long long> first_violation(const IntPoly &p, long long n0, bool strict)
{
    if (p.is_zero())
        return strict ? std::optional<long long>(n0) : std::nullopt;
    BigInt start(n0);
    BigInt hi = std::max(start, cauchy_bound(p));
    if (hi - start <= sweep_limit) {
        for (BigInt n = start; n <= hi; ++n)
            if (violates(p, n, strict))
                return to_ll(n);
        return std::nullopt;
    }
    std::set<BigInt> candidates{start, hi};
    for (const auto &k : root_cells(p, start - 1, hi)) {
        candidates.insert(k + 1);
        candidates.insert(k + 2);
    }
    for (const auto &n : candidates)
        if (n >= start && violates(p, n, strict))
            return to_ll(n);
    return std::nullopt;
}

Certificate certify_poly_nonneg(const IntPoly &p, RayDomain ray, bool strict)
{
    Certificate c;
    Relation rel = strict ? Relation::gt : Relation::ge;
    c.claim = Claim{RatFn(p), rel, RatFn(0), ray, std::nullopt};
    c.claim_text = to_string(p) + " " + to_string(rel) + " 0 for n >= " + std::to_string(ray.n0);
    c.audit.push_back(p);
    if (p.is_zero()) {
        if (strict) {
            c.verdict = Verdict::fails;
            c.method = Method::counterexample;
            c.witness = ray.n0;
        } else {
            c.method = Method::identity;
        }
        return c;
    }
    IntPoly shifted = poly_shift(p, ray.n0);
    c.audit.push_back(shifted);
    const auto &k = shifted.coeffs();
    bool nonneg = std::all_of(k.begin(), k.end(), [](const BigInt &x) { return x >= 0; });
    if (nonneg && (!strict || shifted.constant_term() > 0)) {
        c.method = Method::shift_nonneg_coefficients;
        return c;
    }
    if (auto w = first_violation(p, ray.n0, strict)) {
        c.verdict = Verdict::fails;
        c.method = Method::counterexample;
        c.witness = *w;
        return c;
    }
    c.method = Method::root_bound_pointwise;
    c.notes.push_back("root bound " + cauchy_bound(p).str());
    return c;
}

std::string claim_text(const RatFn &lhs, Relation rel, const RatFn &rhs, const std::vector<IntPoly> &hints)
{
    return to_string(lhs, hints) + " " + to_string(rel) + " " + to_string(rhs, hints);
}

Certificate certify_cmp(const RatFn &lhs, const RatFn &rhs, Relation rel, RayDomain ray)
{
    check_poles(lhs, ray.n0);
    check_poles(rhs, ray.n0);

    Certificate c;
    c.claim = Claim{lhs, rel, rhs, ray, std::nullopt};
    c.claim_text = claim_text(lhs, rel, rhs) + " for n >= " + std::to_string(ray.n0);
    RatFn diff = lhs - rhs;
    c.audit = {diff.num(), diff.den()};

    if (rel == Relation::eq) {
        if (diff.is_zero()) {
            c.method = Method::identity;
            return c;
        }
        long long n = ray.n0;
        while (diff.num()(BigInt(n)) == 0)
            ++n;
        c.verdict = Verdict::fails;
        c.method = Method::counterexample;
        c.witness = n;
        return c;
    }
    if (diff.is_zero()) {
        if (rel == Relation::le || rel == Relation::ge) {
            c.method = Method::identity;
        } else {
            c.verdict = Verdict::fails;
            c.method = Method::counterexample;
            c.witness = ray.n0;
        }
        return c;
    }

    // sign(diff(n)) = sign(P(n)) at every integer of the ray
    IntPoly P;
    if (certify_poly_nonneg(diff.den(), ray, true).holds()) {
        P = diff.num();
        c.notes.push_back("denominator positive on ray");
    } else if (certify_poly_nonneg(-diff.den(), ray, true).holds()) {
        P = -diff.num();
        c.notes.push_back("denominator negative on ray");
    } else {
        P = diff.num() * diff.den();
        c.notes.push_back("denominator changes sign on ray; using numerator times denominator");
    }
    bool strict = rel == Relation::lt || rel == Relation::gt;
    IntPoly Q = (rel == Relation::lt || rel == Relation::le) ? -P : P;
    Certificate inner = certify_poly_nonneg(Q, ray, strict);
    c.verdict = inner.verdict;
    c.method = inner.method;
    c.witness = inner.witness;
    c.audit.insert(c.audit.end(), inner.audit.begin(), inner.audit.end());
    c.notes.insert(c.notes.end(), inner.notes.begin(), inner.notes.end());
    return c;
}

Certificate certify_at(const RatFn &lhs, const RatFn &rhs, Relation rel, long long n)
{
    BigInt bn(n);
    if (lhs.den()(bn) == 0 || rhs.den()(bn) == 0)
        throw IllPosedClaim(n, "denominator vanishes at n = " + std::to_string(n));
    Certificate c;
    c.claim = Claim{lhs, rel, rhs, RayDomain{n}, n};
    c.claim_text = claim_text(lhs, rel, rhs) + " at n = " + std::to_string(n);
    Rational l = lhs(bn), r = rhs(bn);
    c.method = Method::point_evaluation;
    c.notes.push_back("lhs = " + to_string(l) + ", rhs = " + to_string(r));
    if (!compare(l, rel, r)) {
        c.verdict = Verdict::fails;
        c.witness = n;
    }
    return c;
}

std::optional<long long> minimal_threshold(const RatFn &lhs, const RatFn &rhs, Relation rel)
{
    RatFn diff = lhs - rhs;
    BigInt bound = 1;
    for (const IntPoly *p : {&diff.num(), &diff.den(), &lhs.den(), &rhs.den()})
        if (!p->is_zero())
            bound = std::max(bound, cauchy_bound(*p));
    long long top = to_ll(bound) + 1;
    auto holds_at = [&](long long n) {
        BigInt bn(n);
        if (lhs.den()(bn) == 0 || rhs.den()(bn) == 0)
            return false;
        return compare(lhs(bn), rel, rhs(bn));
    };
    if (!holds_at(top))
        return std::nullopt;
    long long m = top;
    while (m > 1 && holds_at(m - 1))
        --m;
    return m;
}

OracleResult brute_oracle(const RatFn &lhs, const RatFn &rhs, Relation rel, long long a, long long b)
{
    OracleResult out;
    Relation folded = rel;
    for (long long n = a; n <= b; ++n) {
        BigInt bn(n);
        BigInt ln = lhs.num()(bn), ld = lhs.den()(bn), rn = rhs.num()(bn), rd = rhs.den()(bn);
        if (ld == 0 || rd == 0) {
            out.poles.push_back(n);
            continue;
        }
        // lhs - rhs = (ln*rd - rn*ld) / (ld*rd); compare the cross product with 0
        BigInt cross = ln * rd - rn * ld;
        folded = sign(ld) * sign(rd) > 0 ? rel : flip_for_sign(rel);
        if (!compare(Rational(cross), folded, Rational(0)))
            out.counterexamples.push_back(n);
    }
    return out;
}

nlohmann::ordered_json to_json(const Certificate &c)
{
    nlohmann::ordered_json j;
    j["claim"] = c.claim_text;
    if (c.claim) {
        if (c.claim->at)
            j["domain"] = {{"n", *c.claim->at}};
        else
            j["domain"] = {{"ray", c.claim->ray.n0}};
    }
    j["verdict"] = to_string(c.verdict);
    j["method"] = to_string(c.method);
    j["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    auto audit = nlohmann::ordered_json::array();
    for (const auto &p : c.audit)
        audit.push_back(to_string(p));
    j["audit"] = audit;
    if (!c.notes.empty())
        j["notes"] = c.notes;
    return j;
}

} // namespace dp
