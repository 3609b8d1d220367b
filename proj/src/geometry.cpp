#include "delpezzo/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dp {

namespace mp = boost::multiprecision;

namespace {

BigInt mod(const BigInt &a, const BigInt &m)
{
    BigInt r = a % m;
    return r < 0 ? r + m : r;
}

long long to_ll(const BigInt &v) { return v.convert_to<long long>(); }

void require_linear(const IntPoly &p)
{
    if (p.degree() > 1)
        throw std::invalid_argument("expected a polynomial of degree at most 1, got " + to_string(p));
}

// Both are rational multiples of one polynomial.
bool proportional(const IntPoly &a, const IntPoly &b)
{
    return a.coeff(1) * b.coeff(0) == a.coeff(0) * b.coeff(1);
}

// For non-proportional linear a, b: gcd(a(n), b(n)) divides this constant.
BigInt elimination_constant(const IntPoly &a, const IntPoly &b)
{
    return mp::abs(b.coeff(1) * a.coeff(0) - a.coeff(1) * b.coeff(0));
}

NPredicate reduce_period(NPredicate p)
{
    std::size_t m = p.byResidue.size();
    for (std::size_t q = 1; q < m; ++q) {
        if (m % q)
            continue;
        bool ok = true;
        for (std::size_t r = q; r < m && ok; ++r)
            ok = p.byResidue[r] == p.byResidue[r % q];
        if (ok) {
            p.byResidue.resize(q);
            p.modulus = q;
            break;
        }
    }
    return p;
}

NPredicate periodic(const BigInt &m, const std::function<bool(const BigInt &)> &at_residue)
{
    NPredicate p;
    p.modulus = m;
    p.byResidue.assign(static_cast<std::size_t>(to_ll(m)), false);
    for (long long r = 0; r < to_ll(m); ++r)
        p.byResidue[static_cast<std::size_t>(r)] = at_residue(BigInt(r));
    return reduce_period(std::move(p));
}

NPredicate negate(NPredicate p)
{
    p.byResidue.flip();
    for (auto &[n, v] : p.overrides)
        v = !v;
    return p;
}

std::string coords_text(const std::vector<int> &c)
{
    std::string s;
    for (int i : c)
        s += coord_name(i);
    return s;
}

std::string weights_text(const Weights &w)
{
    std::string s = "P(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + to_string(w[i]);
    return s + ")";
}

std::optional<WellFormedFailure> to_failure(const NPredicate &fails, std::vector<int> coords, RayDomain ray)
{
    if (fails.constant_on(ray) == false)
        return std::nullopt;
    WellFormedFailure f;
    f.coords = std::move(coords);
    f.predicate = fails;
    f.modulus = fails.modulus;
    for (std::size_t r = 0; r < fails.byResidue.size(); ++r)
        if (fails.byResidue[r])
            f.residues.push_back(BigInt(r));
    long long last = ray.n0;
    for (const auto &[n, v] : fails.overrides) {
        if (n < ray.n0)
            continue;
        last = std::max(last, n);
        if (v && !fails.byResidue[static_cast<std::size_t>(to_ll(mod(BigInt(n), fails.modulus)))])
            f.points.push_back(n);
    }
    for (long long n = ray.n0;; ++n) {
        if (fails.at(n)) {
            f.first = n;
            break;
        }
        if (n > last + to_ll(fails.modulus))
            break;
    }
    return f;
}

std::string describe(const WellFormedFailure &f)
{
    std::string what = f.coords.size() == 2 ? "gcd of the " + coords_text(f.coords) + " weights does not divide d"
                                            : "the " + coords_text(f.coords) + " weights share a factor";
    std::string where;
    if (!f.residues.empty()) {
        if (f.modulus == 1) {
            where = "for every n";
        } else {
            where = "for n = ";
            for (std::size_t k = 0; k < f.residues.size(); ++k)
                where += (k ? "," : "") + f.residues[k].str();
            where += " mod " + f.modulus.str();
        }
    }
    if (!f.points.empty()) {
        where += where.empty() ? "at n = " : " and at n = ";
        for (std::size_t k = 0; k < f.points.size(); ++k)
            where += (k ? "," : "") + std::to_string(f.points[k]);
    }
    return what + " " + where + " (first failure n = " + std::to_string(f.first) + ")";
}

std::string stratum_key(const SingularStratum &s)
{
    std::string k = s.kind == StratumKind::vertex ? "vertex " : "edge ";
    k += coord_name(s.i);
    if (s.kind == StratumKind::edge)
        k += coord_name(s.j);
    return k + " order " + to_string(s.order) + " label " + s.label;
}

} // namespace

bool NPredicate::at(long long n) const
{
    auto it = overrides.find(n);
    if (it != overrides.end())
        return it->second;
    return byResidue[static_cast<std::size_t>(to_ll(mod(BigInt(n), modulus)))];
}

std::optional<bool> NPredicate::constant_on(RayDomain ray) const
{
    bool v = byResidue.front();
    if (std::any_of(byResidue.begin(), byResidue.end(), [&](bool b) { return b != v; }))
        return std::nullopt;
    for (const auto &[n, b] : overrides)
        if (n >= ray.n0 && b != v)
            return std::nullopt;
    return v;
}

BigInt int_gcd(const BigInt &a, const BigInt &b) { return mp::gcd(mp::abs(a), mp::abs(b)); }

NPredicate divides(const IntPoly &a, const IntPoly &b, RayDomain ray)
{
    if (a.is_zero())
        throw std::invalid_argument("divisibility by the zero polynomial");
    require_linear(a);
    if (a.is_constant()) {
        BigInt c = mp::abs(a.constant_term());
        return periodic(c, [&](const BigInt &r) { return mod(b(r), c) == 0; });
    }
    IntPoly q;
    if (divide_exact(b, a, q)) {
        NPredicate p;
        p.byResidue = {true};
        return p;
    }
    PseudoDivision pd = pseudo_divide(b, a);
    if (pd.remainder.is_zero()) {
        // b(n) / a(n) = q(n) / scale
        BigInt s = mp::abs(pd.scale);
        NPredicate p = periodic(s, [&](const BigInt &r) { return mod(pd.quotient(r), s) == 0; });
        for (long long n : integer_roots(a, ray.n0, std::max(ray.n0, to_ll(cauchy_bound(a)))))
            p.overrides[n] = b(BigInt(n)) == 0;
        return p;
    }
    require_linear(pd.remainder);
    if (!pd.remainder.is_constant())
        throw std::invalid_argument("divisibility with a non-constant remainder");
    // a(n) | b(n) forces a(n) | R, so only finitely many n qualify
    BigInt R = mp::abs(pd.remainder.constant_term());
    BigInt alpha = a.coeff(1), beta = a.coeff(0);
    BigInt e1 = (-R - beta), e2 = (R - beta);
    if (alpha < 0)
        std::swap(e1, e2);
    BigInt lo = e1 / alpha - 1, hi = e2 / alpha + 1;
    NPredicate p;
    for (BigInt n = std::max(lo, BigInt(ray.n0)); n <= hi; ++n) {
        BigInt an = a(n), bn = b(n);
        bool ok = an == 0 ? bn == 0 : mod(bn, mp::abs(an)) == 0;
        if (ok)
            p.overrides[to_ll(n)] = true;
    }
    return p;
}

WellFormedness check_well_formed(const Weights &w, const IntPoly &d, RayDomain ray)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].degree() > 1)
            throw InvalidFamily("weight " + to_string(w[i]) + " is not linear in n");
        Certificate pos = certify_poly_nonneg(w[i], ray, true);
        if (!pos.holds())
            throw InvalidFamily("weight " + to_string(w[i]) + " is not positive at n = " +
                                std::to_string(*pos.witness));
    }
    WellFormedness out;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const IntPoly &A = w[static_cast<std::size_t>(i)], &B = w[static_cast<std::size_t>(j)];
            NPredicate fails;
            if (proportional(A, B)) {
                fails = negate(divides(poly_gcd(A, B), d, ray));
            } else {
                BigInt M = elimination_constant(A, B);
                fails = periodic(M, [&](const BigInt &r) {
                    BigInt g = int_gcd(int_gcd(A(r), B(r)), M);
                    return mod(d(r), g) != 0;
                });
            }
            if (auto f = to_failure(fails, {i, j}, ray))
                out.failures.push_back(*f);
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                std::array<const IntPoly *, 3> t{&w[static_cast<std::size_t>(i)], &w[static_cast<std::size_t>(j)],
                                                 &w[static_cast<std::size_t>(k)]};
                std::optional<BigInt> M;
                for (int u = 0; u < 3 && !M; ++u)
                    for (int v = u + 1; v < 3 && !M; ++v)
                        if (!proportional(*t[static_cast<std::size_t>(u)], *t[static_cast<std::size_t>(v)]))
                            M = elimination_constant(*t[static_cast<std::size_t>(u)], *t[static_cast<std::size_t>(v)]);
                NPredicate fails;
                if (M) {
                    fails = periodic(*M, [&](const BigInt &r) {
                        BigInt g = int_gcd(int_gcd(int_gcd((*t[0])(r), (*t[1])(r)), (*t[2])(r)), *M);
                        return g != 1;
                    });
                } else {
                    IntPoly g = poly_gcd(poly_gcd(*t[0], *t[1]), *t[2]);
                    fails.byResidue = {true};
                    if (g.is_constant()) {
                        fails.byResidue = {mp::abs(g.constant_term()) != 1};
                    } else {
                        for (long long n : integer_roots(g - IntPoly(1), ray.n0, std::max(ray.n0, to_ll(cauchy_bound(g)) + 2)))
                            fails.overrides[n] = false;
                        for (long long n : integer_roots(g + IntPoly(1), ray.n0, std::max(ray.n0, to_ll(cauchy_bound(g)) + 2)))
                            fails.overrides[n] = false;
                    }
                }
                if (auto f = to_failure(fails, {i, j, k}, ray))
                    out.failures.push_back(*f);
            }
        }
    }
    Certificate &c = out.certificate;
    c.claim_text = weights_text(w) + " of degree " + to_string(d) + " is well-formed for n >= " + std::to_string(ray.n0);
    c.method = Method::residue_case_split;
    c.audit.assign(w.begin(), w.end());
    c.audit.push_back(d);
    for (const auto &f : out.failures) {
        c.notes.push_back(describe(f));
        if (!c.witness || f.first < *c.witness)
            c.witness = f.first;
    }
    c.verdict = out.failures.empty() ? Verdict::holds : Verdict::fails;
    return out;
}

bool WellFormedness::fails_at(long long n) const
{
    return std::any_of(failures.begin(), failures.end(), [&](const WellFormedFailure &f) { return f.predicate.at(n); });
}

IntPoly compute_index(const Weights &w, const IntPoly &d)
{
    IntPoly s;
    for (const auto &a : w)
        s += a;
    return s - d;
}

std::vector<std::string> check_degree_consistency(const std::vector<Monomial> &monomials,
                                                  const std::vector<IntPoly> &weights, const IntPoly &d,
                                                  const std::string &what)
{
    std::vector<std::string> out;
    for (const auto &m : monomials) {
        IntPoly deg = weighted_degree(m, weights);
        if (deg != d)
            out.push_back(what + " " + to_string(m) + ": weighted degree " + to_string(deg) + " differs from " +
                          to_string(d));
    }
    return out;
}

std::vector<std::string> check_degree_consistency(const FamilySpec &f)
{
    std::vector<std::string> out;
    auto w = f.weight_list();
    auto add = [&](std::vector<std::string> v) { out.insert(out.end(), v.begin(), v.end()); };
    if (f.polynomial)
        add(check_degree_consistency(*f.polynomial, w, f.degree, "family " + std::to_string(f.no) + " monomial"));
    if (f.moving)
        add(check_degree_consistency(f.moving->monomials, w, f.moving->degree,
                                     "family " + std::to_string(f.no) + " moving-system monomial"));
    if (f.hy) {
        add(check_degree_consistency(f.hy->binomial, w, f.degree, "family " + std::to_string(f.no) + " H_y monomial"));
        for (const auto &m : f.hy->binomial)
            if (!m.exps[1].is_zero())
                out.push_back("family " + std::to_string(f.no) + " H_y monomial " + to_string(m) + " involves y");
    }
    return out;
}

const char *to_string(Membership m)
{
    switch (m) {
    case Membership::onSurface:
        return "onSurface";
    case Membership::offSurface:
        return "offSurface";
    case Membership::perN:
        return "perN";
    }
    return "?";
}

VertexMembership vertex_membership(const FamilySpec &f, int i, std::optional<RayDomain> ray)
{
    RayDomain r = ray.value_or(table_ray(f));
    VertexMembership vm;
    vm.off = divides(f.weights[static_cast<std::size_t>(i)], f.degree, r);
    auto c = vm.off.constant_on(r);
    vm.kind = !c ? Membership::perN : (*c ? Membership::offSurface : Membership::onSurface);
    if (!f.polynomial)
        return vm;
    const Monomial *pure = nullptr;
    for (const auto &m : *f.polynomial) {
        bool only = !m.exps[static_cast<std::size_t>(i)].is_zero();
        for (std::size_t v = 0; v < m.exps.size() && only; ++v)
            if (static_cast<int>(v) != i && !m.exps[v].is_zero())
                only = false;
        if (only)
            pure = &m;
    }
    std::string who = "family " + std::to_string(f.no) + " vertex " + vertex_label(i);
    if (pure && pure->coefficientNonzero && vm.kind != Membership::offSurface)
        vm.diagnostics.push_back(who + ": pure power " + to_string(*pure) +
                                 " is present but the weight does not divide the degree");
    if (!pure && vm.kind == Membership::offSurface)
        vm.diagnostics.push_back(who + ": the weight divides the degree but no pure power is listed");
    return vm;
}

std::vector<SingularStratum> singular_strata(const FamilySpec &f)
{
    std::vector<SingularStratum> out;
    for (int i = 0; i < 4; ++i) {
        const IntPoly &a = f.weights[static_cast<std::size_t>(i)];
        if (a == IntPoly(1))
            continue;
        if (vertex_membership(f, i).kind == Membership::onSurface)
            out.push_back({StratumKind::vertex, i, i, vertex_label(i), a, std::nullopt});
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            IntPoly g = poly_gcd(f.weights[static_cast<std::size_t>(i)], f.weights[static_cast<std::size_t>(j)]);
            if (g.is_constant() && g.constant_term() <= 1)
                continue;
            out.push_back({StratumKind::edge, i, j, order_label(g), g, std::nullopt});
        }
    }
    return out;
}

std::vector<std::string> compare_strata(const std::vector<SingularStratum> &computed,
                                        const std::vector<SingularStratum> &recorded)
{
    std::set<std::string> a, b;
    for (const auto &s : computed)
        a.insert(stratum_key(s));
    for (const auto &s : recorded)
        b.insert(stratum_key(s));
    std::vector<std::string> out;
    for (const auto &k : b)
        if (!a.count(k))
            out.push_back("recorded stratum not derived: " + k);
    for (const auto &k : a)
        if (!b.count(k))
            out.push_back("derived stratum not recorded: " + k);
    return out;
}

} // namespace dp
