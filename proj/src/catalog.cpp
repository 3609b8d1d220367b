#include "delpezzo/catalog.hpp"

#include "delpezzo/cylinder.hpp"
#include "delpezzo/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace dp {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

CatalogError::CatalogError(const std::string &where, const std::string &what)
    : std::runtime_error(where.empty() ? what : where + ": " + what), where(where)
{
}

namespace {

constexpr const char *kFormat = "delpezzo-catalog";
constexpr int kVersion = 1;

// ---- reading ----

const json &req(const json &j, const char *key, const std::string &path)
{
    if (!j.is_object())
        throw CatalogError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end() || it->is_null())
        throw CatalogError(path + "." + key, "missing field");
    return *it;
}

const json *opt(const json &j, const char *key)
{
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string str(const json &j, const std::string &path)
{
    if (!j.is_string())
        throw CatalogError(path, "expected a string");
    return j.get<std::string>();
}

long long integer(const json &j, const std::string &path)
{
    if (!j.is_number_integer())
        throw CatalogError(path, "expected an integer");
    return j.get<long long>();
}

bool boolean(const json &j, const std::string &path)
{
    if (!j.is_boolean())
        throw CatalogError(path, "expected true or false");
    return j.get<bool>();
}

const json &array(const json &j, const std::string &path)
{
    if (!j.is_array())
        throw CatalogError(path, "expected an array");
    return j;
}

IntPoly coeff_array(const json &j, const std::string &path)
{
    std::vector<BigInt> c;
    for (std::size_t k = 0; k < j.size(); ++k)
        c.push_back(BigInt(integer(j[k], path + "[" + std::to_string(k) + "]")));
    return IntPoly(std::move(c));
}

IntPoly poly(const json &j, const std::string &path)
{
    if (j.is_array())
        return coeff_array(j, path);
    if (j.is_number_integer())
        return IntPoly(BigInt(j.get<long long>()));
    try {
        return parse_poly(str(j, path));
    } catch (const ParseError &e) {
        throw CatalogError(path, std::string("bad polynomial: ") + e.what());
    } catch (const std::domain_error &e) {
        throw CatalogError(path, std::string("bad polynomial: ") + e.what());
    }
}

RatFn ratfn(const json &j, const std::string &path)
{
    if (j.is_array() || j.is_number_integer())
        return RatFn(poly(j, path));
    if (j.is_object()) {
        IntPoly den = poly(req(j, "den", path), path + ".den");
        if (den.is_zero())
            throw CatalogError(path + ".den", "zero denominator");
        return RatFn(poly(req(j, "num", path), path + ".num"), den);
    }
    try {
        return parse_ratfn(str(j, path));
    } catch (const ParseError &e) {
        throw CatalogError(path, std::string("bad expression: ") + e.what());
    } catch (const std::domain_error &e) {
        throw CatalogError(path, std::string("bad expression: ") + e.what());
    }
}

Rational rational(const json &j, const std::string &path)
{
    RatFn f = ratfn(j, path);
    if (!f.num().is_constant() || !f.den().is_constant())
        throw CatalogError(path, "expected a constant");
    return make_rational(f.num().constant_term(), f.den().constant_term());
}

Monomial monomial(const json &j, int nvars, const std::string &path)
{
    std::string text;
    bool nonzero = true;
    if (j.is_object()) {
        text = str(req(j, "m", path), path + ".m");
        if (const json *c = opt(j, "coefficientNonzero"))
            nonzero = boolean(*c, path + ".coefficientNonzero");
    } else {
        text = str(j, path);
    }
    try {
        Monomial m = parse_monomial(text, nvars);
        m.coefficientNonzero = nonzero;
        return m;
    } catch (const ParseError &e) {
        throw CatalogError(path, std::string("bad monomial: ") + e.what());
    }
}

std::vector<Monomial> monomials(const json &j, int nvars, const std::string &path)
{
    std::vector<Monomial> out;
    array(j, path);
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(monomial(j[k], nvars, path + "[" + std::to_string(k) + "]"));
    return out;
}

std::vector<int> coords(const json &j, const std::string &path)
{
    std::vector<int> out;
    for (char c : str(j, path)) {
        int i = coord_index(c);
        if (i < 0 || i > 3)
            throw CatalogError(path, std::string("unknown coordinate '") + c + "'");
        out.push_back(i);
    }
    return out;
}

SectionBlock block(const json &j, const std::string &path)
{
    SectionBlock b;
    if (const json *d = opt(j, "divisor"))
        b.divisor = str(*d, path + ".divisor");
    if (const json *d = opt(j, "displayedLhs"))
        b.displayedLhs = ratfn(*d, path + ".displayedLhs");
    const json &sites = array(req(j, "sites", path), path + ".sites");
    for (std::size_t k = 0; k < sites.size(); ++k) {
        std::string p = path + ".sites[" + std::to_string(k) + "]";
        SiteBound s;
        s.site = str(req(sites[k], "site", p), p + ".site");
        if (const json *m = opt(sites[k], "mult"))
            s.mult = static_cast<int>(integer(*m, p + ".mult"));
        if (const json *t = opt(sites[k], "threshold"))
            s.threshold = ratfn(*t, p + ".threshold");
        b.sites.push_back(std::move(s));
    }
    if (const json *r = opt(j, "reconstructed"))
        b.reconstructed = boolean(*r, path + ".reconstructed");
    if (const json *s = opt(j, "source"))
        b.source = str(*s, path + ".source");
    return b;
}

FamilySpec family(const json &j, const std::string &path)
{
    FamilySpec f;
    f.no = static_cast<int>(integer(req(j, "no", path), path + ".no"));
    if (const json *s = opt(j, "source"))
        f.source = str(*s, path + ".source");
    const json &w = array(req(j, "weights", path), path + ".weights");
    if (w.size() != 4)
        throw CatalogError(path + ".weights", "expected four weights");
    for (std::size_t k = 0; k < 4; ++k)
        f.weights[k] = poly(w[k], path + ".weights[" + std::to_string(k) + "]");
    f.degree = poly(req(j, "degree", path), path + ".degree");
    f.index = poly(req(j, "index", path), path + ".index");
    f.ray = RayDomain{integer(req(j, "ray", path), path + ".ray")};

    if (const json *wf = opt(j, "wellFormed")) {
        std::string p = path + ".wellFormed";
        if (const json *ex = opt(*wf, "exceptions")) {
            array(*ex, p + ".exceptions");
            for (std::size_t k = 0; k < ex->size(); ++k) {
                std::string q = p + ".exceptions[" + std::to_string(k) + "]";
                WellFormedException e;
                e.coords = coords(req((*ex)[k], "coords", q), q + ".coords");
                e.modulus = BigInt(integer(req((*ex)[k], "modulus", q), q + ".modulus"));
                const json &rs = array(req((*ex)[k], "residues", q), q + ".residues");
                for (std::size_t r = 0; r < rs.size(); ++r)
                    e.residues.push_back(BigInt(integer(rs[r], q + ".residues")));
                f.wellFormedExceptions.push_back(std::move(e));
            }
        }
    }

    if (const json *p = opt(j, "polynomial")) {
        std::string q = path + ".polynomial";
        f.polynomial = monomials(req(*p, "monomials", q), 4, q + ".monomials");
        if (const json *s = opt(*p, "source"))
            f.polynomialSource = str(*s, q + ".source");
        if (const json *r = opt(*p, "reconstructed"))
            f.polynomialReconstructed = boolean(*r, q + ".reconstructed");
    }

    if (const json *st = opt(j, "strata")) {
        array(*st, path + ".strata");
        for (std::size_t k = 0; k < st->size(); ++k) {
            std::string q = path + ".strata[" + std::to_string(k) + "]";
            const json &e = (*st)[k];
            SingularStratum s;
            s.label = str(req(e, "label", q), q + ".label");
            std::string kind = str(req(e, "kind", q), q + ".kind");
            std::vector<int> cs = coords(req(e, "coords", q), q + ".coords");
            if (kind == "vertex" && cs.size() == 1) {
                s.kind = StratumKind::vertex;
                s.i = s.j = cs[0];
            } else if (kind == "edge" && cs.size() == 2) {
                s.kind = StratumKind::edge;
                s.i = std::min(cs[0], cs[1]);
                s.j = std::max(cs[0], cs[1]);
            } else {
                throw CatalogError(q, "a vertex names one coordinate and an edge two");
            }
            s.order = poly(req(e, "order", q), q + ".order");
            if (const json *c = opt(e, "count"))
                s.count = poly(*c, q + ".count");
            f.strata.push_back(std::move(s));
        }
    }

    if (const json *h = opt(j, "hx")) {
        std::string s = str(*h, path + ".hx");
        if (s == "irreducible")
            f.hx = HxShape::irreducible;
        else if (s == "twoComponents")
            f.hx = HxShape::twoComponents;
        else
            throw CatalogError(path + ".hx", "expected irreducible or twoComponents");
    }

    if (const json *nl = opt(j, "nonlc")) {
        std::string p = path + ".nonlc";
        if (const json *m = opt(*nl, "moving")) {
            MovingSystem ms;
            ms.monomials = monomials(req(*m, "monomials", p + ".moving"), 4, p + ".moving.monomials");
            ms.degree = poly(req(*m, "degree", p + ".moving"), p + ".moving.degree");
            ms.block = block(*m, p + ".moving");
            f.moving = std::move(ms);
        }
        if (const json *h = opt(*nl, "hy")) {
            std::string q = p + ".hy";
            HySection hy;
            hy.binomial = monomials(req(*h, "binomial", q), 4, q + ".binomial");
            const json &ex = array(req(*h, "localExponents", q), q + ".localExponents");
            if (ex.size() != 2)
                throw CatalogError(q + ".localExponents", "expected two exponents");
            hy.localExponents = {static_cast<int>(integer(ex[0], q + ".localExponents[0]")),
                                 static_cast<int>(integer(ex[1], q + ".localExponents[1]"))};
            hy.lct = rational(req(*h, "lct", q), q + ".lct");
            if (const json *s = opt(*h, "lctSource"))
                hy.lctSource = str(*s, q + ".lctSource");
            hy.block = block(*h, q);
            f.hy = std::move(hy);
        }
    }

    if (const json *s = opt(j, "support"))
        f.support = block(*s, path + ".support");

    if (const json *d = opt(j, "decomposition")) {
        std::string p = path + ".decomposition";
        Decomposition dc;
        dc.kind = str(req(*d, "kind", p), p + ".kind");
        std::vector<int> line = coords(req(*d, "line", p), p + ".line");
        if (line.size() != 2 || line[0] == line[1])
            throw CatalogError(p + ".line", "a coordinate line is cut out by two coordinates");
        dc.line = {line[0], line[1]};
        dc.lDotR = ratfn(req(*d, "lDotR", p), p + ".lDotR");
        const json &pts = array(req(*d, "linePoints", p), p + ".linePoints");
        for (std::size_t k = 0; k < pts.size(); ++k)
            dc.linePoints.push_back(str(pts[k], p + ".linePoints"));
        if (const json *fx = opt(*d, "fixtures")) {
            std::string q = p + ".fixtures";
            if (const json *v = opt(*fx, "lDotK"))
                dc.lDotK = ratfn(*v, q + ".lDotK");
            if (const json *v = opt(*fx, "rDotK"))
                dc.rDotK = ratfn(*v, q + ".rDotK");
            if (const json *v = opt(*fx, "lSq"))
                dc.lSq = ratfn(*v, q + ".lSq");
            if (const json *v = opt(*fx, "rSq"))
                dc.rSq = ratfn(*v, q + ".rSq");
        }
        if (const json *r = opt(*d, "reconstructed"))
            dc.reconstructed = boolean(*r, p + ".reconstructed");
        if (const json *s = opt(*d, "source"))
            dc.source = str(*s, p + ".source");
        f.decomposition = std::move(dc);
    }

    if (const json *r = opt(j, "reducible")) {
        std::string p = path + ".reducible";
        ReducibleLedger rl;
        rl.meetingSite = str(req(*r, "meetingSite", p), p + ".meetingSite");
        if (const json *v = opt(*r, "lineLhs"))
            rl.lineLhs = ratfn(*v, p + ".lineLhs");
        if (const json *v = opt(*r, "residualLhs"))
            rl.residualLhs = ratfn(*v, p + ".residualLhs");
        if (const json *v = opt(*r, "meetingReconstructed"))
            rl.meetingReconstructed = boolean(*v, p + ".meetingReconstructed");
        if (const json *v = opt(*r, "meetingSource"))
            rl.meetingSource = str(*v, p + ".meetingSource");
        rl.adjusted = block(req(*r, "adjusted", p), p + ".adjusted");
        if (const json *v = opt(*r, "adjustedSlope"))
            rl.adjustedSlope = ratfn(*v, p + ".adjustedSlope");
        f.reducible = std::move(rl);
    }

    if (const json *c = opt(j, "ci")) {
        std::string p = path + ".ci";
        CompleteIntersection ci;
        const json &cw = array(req(*c, "weights", p), p + ".weights");
        if (cw.size() != 5)
            throw CatalogError(p + ".weights", "expected five weights");
        for (std::size_t k = 0; k < 5; ++k)
            ci.weights.push_back(poly(cw[k], p + ".weights[" + std::to_string(k) + "]"));
        ci.index = poly(req(*c, "index", p), p + ".index");
        const json &eqs = array(req(*c, "equations", p), p + ".equations");
        if (eqs.size() != 2)
            throw CatalogError(p + ".equations", "expected two equations");
        for (std::size_t k = 0; k < 2; ++k)
            ci.equations.push_back(monomials(eqs[k], 5, p + ".equations[" + std::to_string(k) + "]"));
        if (const json *v = opt(*c, "displayedLhs"))
            ci.displayedLhs = ratfn(*v, p + ".displayedLhs");
        if (const json *v = opt(*c, "mult"))
            ci.mult = static_cast<int>(integer(*v, p + ".mult"));
        if (const json *v = opt(*c, "threshold"))
            ci.threshold = ratfn(*v, p + ".threshold");
        if (const json *v = opt(*c, "reconstructed"))
            ci.reconstructed = boolean(*v, p + ".reconstructed");
        if (const json *v = opt(*c, "source"))
            ci.source = str(*v, p + ".source");
        f.ci = std::move(ci);
    }

    if (const json *c = opt(j, "crossRef"))
        f.crossRef = static_cast<int>(integer(*c, path + ".crossRef"));

    if (const json *d = opt(j, "dstar")) {
        std::string p = path + ".dstar";
        DStarFixture ds;
        ds.group = str(req(*d, "group", p), p + ".group");
        ds.dCoeff = ratfn(req(*d, "dCoeff", p), p + ".dCoeff");
        ds.hxCoeff = ratfn(req(*d, "hxCoeff", p), p + ".hxCoeff");
        ds.validFrom = integer(req(*d, "validFrom", p), p + ".validFrom");
        if (const json *s = opt(*d, "source"))
            ds.source = str(*s, p + ".source");
        f.dstar = std::move(ds);
    }

    if (const json *s = opt(j, "stability")) {
        std::string p = path + ".stability";
        if (const json *v = opt(*s, "statedThreshold"))
            f.stability.statedThreshold = integer(*v, p + ".statedThreshold");
        if (const json *v = opt(*s, "unstableFrom"))
            f.stability.unstableFrom = integer(*v, p + ".unstableFrom");
        if (const json *k = opt(*s, "known")) {
            array(*k, p + ".known");
            for (std::size_t i = 0; i < k->size(); ++i) {
                std::string q = p + ".known[" + std::to_string(i) + "]";
                KnownEntry e;
                e.from = integer(req((*k)[i], "from", q), q + ".from");
                if (const json *t = opt((*k)[i], "to"))
                    e.to = integer(*t, q + ".to");
                std::string st = str(req((*k)[i], "status", q), q + ".status");
                auto ks = parse_kstatus(st);
                if (!ks)
                    throw CatalogError(q + ".status", "unknown status " + st);
                e.status = *ks;
                if (const json *c = opt((*k)[i], "citation"))
                    e.citation = str(*c, q + ".citation");
                f.stability.known.push_back(std::move(e));
            }
        }
        if (const json *v = opt(*s, "source"))
            f.stability.source = str(*v, p + ".source");
    }

    if (const json *a = opt(j, "knownAlpha"))
        f.knownAlpha = rational(*a, path + ".knownAlpha");
    if (const json *a = opt(j, "alphaSource"))
        f.alphaSource = str(*a, path + ".alphaSource");
    return f;
}

// ---- writing ----

ojson site_json(const SiteBound &s, const std::vector<IntPoly> &h)
{
    ojson j;
    j["site"] = s.site;
    if (s.mult)
        j["mult"] = *s.mult;
    if (s.threshold)
        j["threshold"] = to_string(*s.threshold, h);
    return j;
}

void block_json(ojson &j, const SectionBlock &b, const std::vector<IntPoly> &h)
{
    if (!b.divisor.empty())
        j["divisor"] = b.divisor;
    if (b.displayedLhs)
        j["displayedLhs"] = to_string(*b.displayedLhs, h);
    ojson sites = ojson::array();
    for (const auto &s : b.sites)
        sites.push_back(site_json(s, h));
    j["sites"] = sites;
    j["reconstructed"] = b.reconstructed;
    j["source"] = b.source;
}

ojson monomial_json(const Monomial &m)
{
    if (m.coefficientNonzero)
        return to_string(m);
    ojson j;
    j["m"] = to_string(m);
    j["coefficientNonzero"] = false;
    return j;
}

ojson monomials_json(const std::vector<Monomial> &ms)
{
    ojson a = ojson::array();
    for (const auto &m : ms)
        a.push_back(monomial_json(m));
    return a;
}

std::string coords_text(const std::vector<int> &cs)
{
    std::string s;
    for (int c : cs)
        s += coord_name(c);
    return s;
}

// ---- validation helpers ----

struct Sink {
    int family;
    std::vector<Diagnostic> &out;
    void operator()(const std::string &field, const std::string &msg, Severity s = Severity::error)
    {
        out.push_back({family, field, msg, s});
    }
};

void expect_equal(Sink &sink, const std::string &field, const std::string &what, const RatFn &recorded,
                  const RatFn &computed, const std::vector<IntPoly> &h)
{
    if (recorded != computed)
        sink(field, what + " mismatch: recorded " + to_string(recorded, h) + ", computed " + to_string(computed, h));
}

std::optional<IntPoly> site_order(const FamilySpec &f, const std::string &site)
{
    if (site == "smooth")
        return IntPoly(1);
    if (site == "q")
        return f.ci && f.ci->weights.size() == 5 ? std::optional<IntPoly>(f.ci->weights[4]) : std::nullopt;
    if (const SingularStratum *s = f.stratum(site))
        return s->order;
    return std::nullopt;
}

void check_block(Sink &sink, const FamilySpec &f, const SectionBlock &b, const std::string &field,
                 const std::optional<RatFn> &lhs, const std::string &what)
{
    auto h = display_hints(f);
    if (b.source.empty())
        sink(field + ".source", "missing source anchor");
    if (lhs && b.displayedLhs)
        expect_equal(sink, field + ".displayedLhs", what, *b.displayedLhs, *lhs, h);
    if (b.sites.empty())
        sink(field + ".sites", "no sites");
    std::set<std::string> seen;
    for (std::size_t k = 0; k < b.sites.size(); ++k) {
        const SiteBound &s = b.sites[k];
        std::string p = field + ".sites[" + std::to_string(k) + "]";
        if (!seen.insert(s.site).second)
            sink(p, "site " + s.site + " listed twice");
        auto order = site_order(f, s.site);
        if (!order) {
            sink(p + ".site", "site " + s.site + " is not a recorded stratum");
            continue;
        }
        if (s.mult && (*s.mult < 1 || *s.mult > 3))
            sink(p + ".mult", "multiplicity " + std::to_string(*s.mult) + " out of range");
        if (s.site == "smooth" && s.mult && *s.mult != 1)
            sink(p + ".mult", "smooth points carry multiplicity 1");
        if (s.mult && s.threshold)
            expect_equal(sink, p + ".threshold", "threshold " + s.site, *s.threshold,
                         RatFn(IntPoly(*s.mult), *order), h);
        if (!s.mult && s.threshold)
            sink(p + ".threshold", "a displayed threshold needs its multiplicity");
        if (!s.mult && !b.reconstructed)
            sink(p + ".mult", "multiplicity may be left open only in reconstructed data");
    }
}

std::vector<int> parse_group(const std::string &g)
{
    std::vector<int> out;
    std::stringstream ss(g);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                int a = std::stoi(part.substr(0, dash)), b = std::stoi(part.substr(dash + 1));
                for (int k = a; k <= b; ++k)
                    out.push_back(k);
            }
        } catch (const std::exception &) {
            return {};
        }
    }
    return out;
}

std::optional<long long> least_positive_from(const std::vector<IntPoly> &ps)
{
    long long n0 = 1;
    for (const auto &p : ps) {
        auto t = minimal_threshold(RatFn(p), RatFn(0), Relation::gt);
        if (!t)
            return std::nullopt;
        n0 = std::max(n0, *t);
    }
    return n0;
}

void check_stability(Sink &sink, const FamilySpec &f)
{
    const StabilityData &s = f.stability;
    auto t = instability_threshold(f);
    for (const auto &w : stability_warnings(f))
        sink("stability.statedThreshold", w, Severity::warning);
    if (s.source.empty())
        sink("stability.source", "missing source anchor");
    // entries must tile [ray, threshold - 1], or the whole ray without a threshold
    long long next = f.ray.n0;
    bool open = false;
    for (std::size_t k = 0; k < s.known.size(); ++k) {
        const KnownEntry &e = s.known[k];
        std::string p = "stability.known[" + std::to_string(k) + "]";
        if (open)
            sink(p, "entry after an open-ended entry");
        if (e.from != next)
            sink(p + ".from", "entry starts at n = " + std::to_string(e.from) + ", expected n = " + std::to_string(next));
        if (e.to && *e.to < e.from)
            sink(p + ".to", "empty range");
        if (e.citation.empty())
            sink(p + ".citation", "missing citation");
        if (e.to)
            next = *e.to + 1;
        else
            open = true;
        if (t && (!e.to || *e.to >= t->n0))
            sink(p, "catalog entry reaches the criterion range n >= " + std::to_string(t->n0));
    }
    if (t && !open && next != t->n0)
        sink("stability.known", "entries end at n = " + std::to_string(next - 1) + ", criterion starts at n = " +
                                    std::to_string(t->n0));
    if (!t && !open)
        sink("stability.known", "no criterion threshold, so the entries must cover every n");
    // the K-unstable range
    if (s.unstableFrom) {
        long long u = *s.unstableFrom;
        if (u < f.ray.n0)
            sink("stability.unstableFrom", "starts before the weight ray n >= " + std::to_string(f.ray.n0));
        if (!t)
            sink("stability.unstableFrom", "recorded but the criterion never holds");
        for (long long n = std::max(u, f.ray.n0); t && n < t->n0; ++n) {
            const KnownEntry *e = known_entry(f, n);
            if (!e || e->status != KStatus::kUnstable)
                sink("stability.unstableFrom", "n = " + std::to_string(n) + " is not known to be K-unstable");
        }
        if (u > f.ray.n0) {
            const KnownEntry *e = known_entry(f, u - 1);
            if ((t && u - 1 >= t->n0) || (e && e->status == KStatus::kUnstable))
                sink("stability.unstableFrom", "n = " + std::to_string(u - 1) + " is already K-unstable");
        }
    } else if (t) {
        sink("stability.unstableFrom", "missing although the criterion holds from n = " + std::to_string(t->n0));
    }
    for (long long n = f.ray.n0; n <= f.ray.n0 + 100; ++n) {
        StabilityVerdict v = stability_status(f, n);
        const KnownEntry *e = known_entry(f, n);
        if (v.source == VerdictSource::criterion && e && e->status == KStatus::kStable)
            sink("stability.known", "n = " + std::to_string(n) + " is recorded K-stable but the criterion holds");
    }
}

} // namespace

const char *to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

bool reducible_hx(int no)
{
    static const std::set<int> re{2, 7, 11, 14, 16, 18, 20, 22};
    return re.count(no) > 0;
}

Catalog load_catalog(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw CatalogError("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
    }
    if (!doc.is_object())
        throw CatalogError("", "the catalog must be a JSON object");
    if (!doc.contains("format") || doc["format"] != kFormat)
        throw CatalogError("format", std::string("expected \"") + kFormat + "\"");
    long long version = integer(req(doc, "version", ""), "version");
    if (version != kVersion)
        throw CatalogError("version", "unknown schema version " + std::to_string(version));
    Catalog c;
    c.version = static_cast<int>(version);
    const json &fs = array(req(doc, "families", ""), "families");
    std::set<int> seen;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        std::string path = "families[" + std::to_string(k) + "]";
        FamilySpec f = family(fs[k], path);
        if (!seen.insert(f.no).second)
            throw CatalogError(path + ".no", "duplicate family number " + std::to_string(f.no));
        c.families.push_back(std::move(f));
    }
    return c;
}

Catalog load_catalog(std::istream &in)
{
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

Catalog load_catalog_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw CatalogError(path, "cannot open the catalog file");
    return load_catalog(in);
}

const Catalog &reference_catalog()
{
    static const Catalog c = load_catalog(embedded_catalog_text());
    return c;
}

std::vector<Diagnostic> validate_family(const Catalog &c, const FamilySpec &f)
{
    std::vector<Diagnostic> out;
    Sink sink{f.no, out};
    auto h = display_hints(f);
    std::string who = "family " + std::to_string(f.no);

    if (f.source.empty())
        sink("source", "missing source anchor");
    IntPoly idx = compute_index(f.weights, f.degree);
    if (idx != f.index)
        sink("index", "Table 1 I-column mismatch (expected " + to_string(idx) + "), recorded " + to_string(f.index));

    // the weight ray
    for (const auto &a : f.weights)
        if (a.degree() > 1)
            sink("weights", "weight " + to_string(a) + " is not linear in n");
    std::vector<IntPoly> pos(f.weights.begin(), f.weights.end());
    pos.push_back(idx);
    auto ray = least_positive_from(pos);
    if (!ray)
        sink("ray", "weights or index never become positive");
    else if (*ray != f.ray.n0)
        sink("ray", "weights and index are positive from n = " + std::to_string(*ray) + ", recorded n = " +
                        std::to_string(f.ray.n0));
    if (f.polynomial)
        for (const auto &d : check_degree_consistency(f))
            sink("polynomial", d);
    if (!out.empty())
        return out;

    for (int k = 0; k + 1 < 4; ++k) {
        Certificate ord = certify_poly_nonneg(f.weights[static_cast<std::size_t>(k) + 1] - f.weights[static_cast<std::size_t>(k)],
                                              f.ray, false);
        if (!ord.holds())
            sink("weights", "weights are not ordered at n = " + std::to_string(*ord.witness));
    }

    // well-formedness against the recorded exceptions
    try {
        WellFormedness wf = check_well_formed(f.weights, f.degree, f.ray);
        std::vector<bool> used(f.wellFormedExceptions.size(), false);
        for (const auto &fail : wf.failures) {
            bool matched = false;
            for (std::size_t k = 0; k < f.wellFormedExceptions.size(); ++k) {
                const auto &e = f.wellFormedExceptions[k];
                if (!used[k] && e.coords == fail.coords && e.modulus == fail.modulus && e.residues == fail.residues &&
                    fail.points.empty()) {
                    used[k] = matched = true;
                    break;
                }
            }
            if (!matched)
                sink("wellFormed", "not well-formed: " + wf.certificate.notes[static_cast<std::size_t>(&fail - wf.failures.data())]);
        }
        for (std::size_t k = 0; k < used.size(); ++k)
            if (!used[k])
                sink("wellFormed.exceptions[" + std::to_string(k) + "]", "recorded exception does not occur");
    } catch (const std::exception &e) {
        sink("weights", e.what());
    }

    // polynomial
    if (f.polynomial) {
        for (int i = 0; i < 4; ++i)
            for (const auto &d : vertex_membership(f, i).diagnostics)
                sink("polynomial", d);
        if (f.polynomialSource.empty())
            sink("polynomial.source", "missing source anchor");
    }

    // strata
    if (!f.strata.empty()) {
        for (std::size_t k = 0; k < f.strata.size(); ++k) {
            const SingularStratum &s = f.strata[k];
            std::string p = "strata[" + std::to_string(k) + "]";
            if (s.kind == StratumKind::vertex) {
                if (s.label != vertex_label(s.i))
                    sink(p + ".label", "vertex label " + s.label + " should be " + vertex_label(s.i));
                if (s.order != f.weights[static_cast<std::size_t>(s.i)])
                    sink(p + ".order", "vertex order differs from its weight");
            } else if (s.label != order_label(s.order)) {
                sink(p + ".label", "edge label " + s.label + " should be " + order_label(s.order));
            }
        }
        for (const auto &d : compare_strata(singular_strata(f), f.strata))
            sink("strata", d);
    } else if (f.no <= 22) {
        sink("strata", "missing singular strata");
    }

    if (reducible_hx(f.no) != (f.hx == HxShape::twoComponents))
        sink("hx", "H_x shape contradicts the irreducible/reducible split");

    // ledger data
    bool ledger = f.no <= 22;
    if (ledger) {
        if (!f.moving)
            sink("nonlc.moving", "missing moving linear system");
        if (!f.support)
            sink("support", "missing support block");
        if (!f.dstar)
            sink("dstar", "missing D* fixture");
        if (f.knownAlpha)
            sink("knownAlpha", "families with a ledger do not use the alpha route");
    } else {
        if (f.moving || f.support || f.dstar || f.decomposition || f.ci)
            sink("support", "ledger data on a family outside the ledger range");
    }

    if (f.moving) {
        const MovingSystem &m = *f.moving;
        std::vector<IntPoly> w = f.weight_list();
        for (const auto &d : check_degree_consistency(m.monomials, w, m.degree, "moving-system monomial"))
            sink("nonlc.moving.monomials", d);
        if (m.monomials.size() < 2)
            sink("nonlc.moving.monomials", "a pencil needs at least two monomials");
        check_block(sink, f, m.block, "nonlc.moving", section_product(f, m.degree, f.index), "M . D");
    }

    if (f.hy) {
        const HySection &hy = *f.hy;
        std::vector<IntPoly> w = f.weight_list();
        for (const auto &d : check_degree_consistency(hy.binomial, w, f.degree, "H_y monomial"))
            sink("nonlc.hy.binomial", d);
        std::vector<int> local;
        for (const auto &m : hy.binomial) {
            if (!m.exps[1].is_zero())
                sink("nonlc.hy.binomial", "H_y monomial " + to_string(m) + " involves y");
            int nz = 0;
            for (int v = 1; v < 4; ++v) {
                const IntPoly &e = m.exps[static_cast<std::size_t>(v)];
                if (e.is_zero())
                    continue;
                ++nz;
                if (e.is_constant())
                    local.push_back(static_cast<int>(e.constant_term().convert_to<long long>()));
            }
            if (nz != 1)
                sink("nonlc.hy.binomial", "monomial " + to_string(m) + " is not a pure power near p_x");
        }
        std::sort(local.begin(), local.end());
        std::array<int, 2> rec = hy.localExponents;
        std::sort(rec.begin(), rec.end());
        if (local.size() != 2 || local[0] != rec[0] || local[1] != rec[1])
            sink("nonlc.hy.localExponents", "local exponents differ from the binomial");
        if (rec[0] >= 1 && rec[1] >= 1) {
            Rational l = make_rational(1, rec[0]) + make_rational(1, rec[1]);
            if (l > 1)
                l = 1;
            if (l != hy.lct)
                sink("nonlc.hy.lct", "lct " + to_string(hy.lct) + " differs from " + to_string(l) +
                                         " for local exponents " + std::to_string(rec[0]) + ", " +
                                         std::to_string(rec[1]));
        } else {
            sink("nonlc.hy.localExponents", "exponents must be positive");
        }
        if (hy.lctSource.empty())
            sink("nonlc.hy.lctSource", "missing source anchor");
        check_block(sink, f, hy.block, "nonlc.hy", section_product(f, f.weights[1], f.index), "H_y . D");
    }

    if (f.support)
        check_block(sink, f, *f.support, "support", section_product(f, f.weights[0], f.index),
                    f.support->divisor + " . D");

    if (f.decomposition) {
        const Decomposition &d = *f.decomposition;
        if (f.hx != HxShape::twoComponents)
            sink("decomposition", "decomposition recorded for an irreducible H_x");
        if (d.source.empty())
            sink("decomposition.source", "missing source anchor");
        if (!line_on_surface(f, d.line[0], d.line[1]))
            sink("decomposition.line", "the line is not on the surface");
        bool points_ok = true;
        for (const auto &p : d.linePoints)
            if (!f.stratum(p)) {
                sink("decomposition.linePoints", "point " + p + " is not a recorded stratum");
                points_ok = false;
            }
        if (points_ok) {
            try {
                expect_equal(sink, "decomposition.lDotR", "L.R against adjunction on L", d.lDotR,
                             adjunction_line_residual(f), h);
                DecompositionData dd = *hx_decomposition(f);
                if (d.lDotK)
                    expect_equal(sink, "decomposition.fixtures.lDotK", "L.(-K)", *d.lDotK, dd.lDotK, h);
                if (d.rDotK)
                    expect_equal(sink, "decomposition.fixtures.rDotK", "R.(-K)", *d.rDotK, dd.rDotK, h);
                if (d.lSq)
                    expect_equal(sink, "decomposition.fixtures.lSq", "L^2", *d.lSq, dd.lSq, h);
                if (d.rSq)
                    expect_equal(sink, "decomposition.fixtures.rSq", "R^2", *d.rSq, dd.rSq, h);
                if (dd.lDotK + dd.rDotK != section_product(f, f.weights[0], f.index))
                    sink("decomposition", "L.(-K) + R.(-K) differs from H_x.(-K)");
            } catch (const std::invalid_argument &e) {
                sink("decomposition", e.what());
            }
        }
    } else if (f.hx == HxShape::twoComponents) {
        sink("decomposition", "reducible H_x without a decomposition");
    }

    if (f.reducible) {
        const ReducibleLedger &r = *f.reducible;
        if (!f.decomposition) {
            sink("reducible", "ledger without a decomposition");
        } else {
            const Decomposition &d = *f.decomposition;
            if (std::find(d.linePoints.begin(), d.linePoints.end(), r.meetingSite) == d.linePoints.end())
                sink("reducible.meetingSite", "meeting point " + r.meetingSite + " is not on L");
            if (r.meetingSource.empty())
                sink("reducible.meetingSource", "missing source anchor");
            try {
                DecompositionData dd = *hx_decomposition(f);
                if (r.lineLhs)
                    expect_equal(sink, "reducible.lineLhs", "L . D", *r.lineLhs, dd.lDotK, h);
                if (r.residualLhs)
                    expect_equal(sink, "reducible.residualLhs", "R . D", *r.residualLhs, dd.rDotK, h);
                if (r.adjustedSlope)
                    expect_equal(sink, "reducible.adjustedSlope", "coefficient of lambda", *r.adjustedSlope, -dd.rSq, h);
                check_block(sink, f, r.adjusted, "reducible.adjusted", dd.rDotK - dd.rSq, "R . (D - R)");
            } catch (const std::invalid_argument &e) {
                sink("reducible", e.what());
            }
        }
    } else if (f.hx == HxShape::twoComponents && !f.crossRef) {
        sink("reducible", "reducible H_x without the meeting and residual ledger");
    }

    if (f.ci) {
        const CompleteIntersection &ci = *f.ci;
        if (ci.source.empty())
            sink("ci.source", "missing source anchor");
        for (std::size_t k = 0; k < 4; ++k)
            if (ci.weights[k] != f.weights[k])
                sink("ci.weights[" + std::to_string(k) + "]", "differs from the surface weight");
        std::vector<IntPoly> degs;
        for (std::size_t e = 0; e < ci.equations.size(); ++e) {
            const auto &eq = ci.equations[e];
            if (eq.empty()) {
                sink("ci.equations", "empty equation");
                continue;
            }
            IntPoly d = weighted_degree(eq.front(), ci.weights);
            degs.push_back(d);
            for (const auto &m : eq)
                if (weighted_degree(m, ci.weights) != d)
                    sink("ci.equations[" + std::to_string(e) + "]",
                         "monomial " + to_string(m) + " has degree " + to_string(weighted_degree(m, ci.weights)) +
                             ", expected " + to_string(d));
            bool w = std::any_of(eq.begin(), eq.end(), [](const Monomial &m) { return !m.exps[4].is_zero(); });
            if (!w)
                sink("ci.equations[" + std::to_string(e) + "]", "equation does not involve w");
        }
        if (degs.size() == 2) {
            IntPoly s;
            for (const auto &a : ci.weights)
                s += a;
            IntPoly ci_index = s - degs[0] - degs[1];
            if (ci_index != ci.index)
                sink("ci.index", "index " + to_string(ci.index) + " differs from " + to_string(ci_index));
            const FamilySpec *model = f.crossRef ? c.find(*f.crossRef) : &f;
            if (model && ci.index != model->index)
                sink("ci.index", "index differs from the index of the " +
                                     std::string(f.crossRef ? "contracted model" : "surface"));
            if (ci.displayedLhs)
                expect_equal(sink, "ci.displayedLhs", "R' . D'", *ci.displayedLhs,
                             ci_product(ci, ci.weights[0], ci.index), h);
        }
        if (ci.mult && ci.threshold)
            expect_equal(sink, "ci.threshold", "threshold at q", *ci.threshold, RatFn(IntPoly(*ci.mult), ci.weights[4]), h);
        if (ci.threshold && !ci.mult)
            sink("ci.mult", "a displayed threshold needs its multiplicity");
        if (ci.mult && *ci.mult != 3)
            sink("ci.mult", "the contracted point bound uses multiplicity 3");
    } else if (f.hx == HxShape::twoComponents) {
        sink("ci", "reducible H_x without a complete-intersection model");
    }

    if (f.crossRef) {
        const FamilySpec *g = c.find(*f.crossRef);
        if (!g)
            sink("crossRef", "unknown family " + std::to_string(*f.crossRef));
        else if (g->hx != HxShape::irreducible || !g->support)
            sink("crossRef", "the contracted model must be an irreducible family with a ledger");
        else if (f.ci && f.ci->equations.size() == 2 && !f.ci->equations[1].empty()) {
            // Y is cut out in the target's ambient space plus w
            std::vector<IntPoly> rest = f.ci->weights;
            for (const auto &a : g->weights) {
                auto it = std::find(rest.begin(), rest.end(), a);
                if (it == rest.end()) {
                    sink("crossRef", "weight " + to_string(a) + " of family " + std::to_string(g->no) +
                                         " is not a weight of the model");
                    break;
                }
                rest.erase(it);
            }
            if (weighted_degree(f.ci->equations[1].front(), f.ci->weights) != g->degree)
                sink("crossRef", "the second equation does not have the degree of family " + std::to_string(g->no));
        }
        if (f.reducible)
            sink("crossRef", "a contracted family has no residual ledger");
    }

    if (f.dstar) {
        const DStarFixture &d = *f.dstar;
        IntPoly g = f.index - f.weights[0] * 2;
        if (g.is_zero()) {
            sink("dstar", "I - 2a0 vanishes identically");
        } else {
            expect_equal(sink, "dstar.dCoeff", "D* coefficient of D", d.dCoeff, RatFn(f.index, g), h);
            expect_equal(sink, "dstar.hxCoeff", "D* coefficient of H_x", d.hxCoeff, RatFn(f.index * 2, g), h);
            auto from = minimal_threshold(RatFn(g), RatFn(0), Relation::gt);
            if (!from || *from != d.validFrom)
                sink("dstar.validFrom", "I - 2a0 > 0 holds from n = " + (from ? std::to_string(*from) : std::string("nowhere")) +
                                            ", recorded n = " + std::to_string(d.validFrom));
        }
        auto group = parse_group(d.group);
        if (std::find(group.begin(), group.end(), f.no) == group.end())
            sink("dstar.group", "group \"" + d.group + "\" does not contain the family");
        for (int k : group) {
            const FamilySpec *o = c.find(k);
            if (!o || !o->dstar || o->dstar->group != d.group)
                sink("dstar.group", "family " + std::to_string(k) + " is not in group \"" + d.group + "\"");
            else if (o->dstar->dCoeff != d.dCoeff)
                sink("dstar.group", "family " + std::to_string(k) + " has a different D* in the same group");
        }
        if (d.source.empty())
            sink("dstar.source", "missing source anchor");
    }

    check_stability(sink, f);

    if (!ledger) {
        if (!f.knownAlpha) {
            sink("knownAlpha", "families without a ledger need a known alpha-invariant");
        } else {
            if (*f.knownAlpha != 1)
                sink("knownAlpha", "cited alpha-invariant is 1, recorded " + to_string(*f.knownAlpha));
            RatFn a(IntPoly(BigInt(numerator(*f.knownAlpha))), IntPoly(BigInt(denominator(*f.knownAlpha))));
            Certificate ub = certify_cmp(a, alpha_upper_bound(f), Relation::le, f.ray);
            if (!ub.holds())
                sink("knownAlpha", "exceeds the upper bound a0/I at n = " + std::to_string(*ub.witness));
            if (f.alphaSource.empty())
                sink("alphaSource", "missing source anchor");
        }
    }

    if (ledger && out.empty()) {
        try {
            nonlc_cases(f);
            support_cases(f);
        } catch (const std::exception &e) {
            sink("support", e.what());
        }
    }
    return out;
}

std::vector<Diagnostic> validate_catalog(const Catalog &c)
{
    std::vector<Diagnostic> out;
    std::set<int> nos;
    for (const auto &f : c.families)
        nos.insert(f.no);
    for (int k = 1; k <= 35; ++k)
        if (!nos.count(k))
            out.push_back({0, "families", "family " + std::to_string(k) + " is missing", Severity::error});
    for (int k : nos)
        if (k < 1 || k > 35)
            out.push_back({0, "families", "unexpected family number " + std::to_string(k), Severity::error});
    for (const auto &f : c.families) {
        auto d = validate_family(c, f);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

ojson diagnostics_json(const std::vector<Diagnostic> &ds)
{
    ojson a = ojson::array();
    for (const auto &d : ds) {
        ojson j;
        j["family"] = d.family;
        j["field"] = d.field;
        j["severity"] = to_string(d.severity);
        j["message"] = d.message;
        a.push_back(j);
    }
    return a;
}

ojson to_json(const FamilySpec &f)
{
    auto h = display_hints(f);
    ojson j;
    j["no"] = f.no;
    j["source"] = f.source;
    ojson w = ojson::array();
    for (const auto &a : f.weights)
        w.push_back(to_string(a));
    j["weights"] = w;
    j["degree"] = to_string(f.degree);
    j["index"] = to_string(f.index);
    j["ray"] = f.ray.n0;
    if (!f.wellFormedExceptions.empty()) {
        ojson ex = ojson::array();
        for (const auto &e : f.wellFormedExceptions) {
            ojson x;
            x["coords"] = coords_text(e.coords);
            x["modulus"] = e.modulus.convert_to<long long>();
            ojson rs = ojson::array();
            for (const auto &r : e.residues)
                rs.push_back(r.convert_to<long long>());
            x["residues"] = rs;
            ex.push_back(x);
        }
        j["wellFormed"]["exceptions"] = ex;
    }
    if (f.polynomial) {
        j["polynomial"]["monomials"] = monomials_json(*f.polynomial);
        j["polynomial"]["source"] = f.polynomialSource;
        j["polynomial"]["reconstructed"] = f.polynomialReconstructed;
    }
    if (!f.strata.empty()) {
        ojson st = ojson::array();
        for (const auto &s : f.strata) {
            ojson x;
            x["label"] = s.label;
            x["kind"] = s.kind == StratumKind::vertex ? "vertex" : "edge";
            x["coords"] = s.kind == StratumKind::vertex ? coords_text({s.i}) : coords_text({s.i, s.j});
            x["order"] = to_string(s.order);
            if (s.count)
                x["count"] = to_string(*s.count);
            st.push_back(x);
        }
        j["strata"] = st;
    }
    j["hx"] = f.hx == HxShape::irreducible ? "irreducible" : "twoComponents";
    if (f.moving || f.hy) {
        ojson nl;
        if (f.moving) {
            ojson m;
            m["monomials"] = monomials_json(f.moving->monomials);
            m["degree"] = to_string(f.moving->degree);
            block_json(m, f.moving->block, h);
            nl["moving"] = m;
        }
        if (f.hy) {
            ojson y;
            y["binomial"] = monomials_json(f.hy->binomial);
            y["localExponents"] = {f.hy->localExponents[0], f.hy->localExponents[1]};
            y["lct"] = to_string(f.hy->lct);
            y["lctSource"] = f.hy->lctSource;
            block_json(y, f.hy->block, h);
            nl["hy"] = y;
        }
        j["nonlc"] = nl;
    }
    if (f.support) {
        ojson s;
        block_json(s, *f.support, h);
        j["support"] = s;
    }
    if (f.decomposition) {
        const Decomposition &d = *f.decomposition;
        ojson x;
        x["kind"] = d.kind;
        x["line"] = coords_text({d.line[0], d.line[1]});
        x["lDotR"] = to_string(d.lDotR, h);
        x["linePoints"] = d.linePoints;
        ojson fx = ojson::object();
        if (d.lDotK)
            fx["lDotK"] = to_string(*d.lDotK, h);
        if (d.rDotK)
            fx["rDotK"] = to_string(*d.rDotK, h);
        if (d.lSq)
            fx["lSq"] = to_string(*d.lSq, h);
        if (d.rSq)
            fx["rSq"] = to_string(*d.rSq, h);
        if (!fx.empty())
            x["fixtures"] = fx;
        x["reconstructed"] = d.reconstructed;
        x["source"] = d.source;
        j["decomposition"] = x;
    }
    if (f.reducible) {
        const ReducibleLedger &r = *f.reducible;
        ojson x;
        x["meetingSite"] = r.meetingSite;
        if (r.lineLhs)
            x["lineLhs"] = to_string(*r.lineLhs, h);
        if (r.residualLhs)
            x["residualLhs"] = to_string(*r.residualLhs, h);
        x["meetingReconstructed"] = r.meetingReconstructed;
        x["meetingSource"] = r.meetingSource;
        ojson a;
        block_json(a, r.adjusted, h);
        x["adjusted"] = a;
        if (r.adjustedSlope)
            x["adjustedSlope"] = to_string(*r.adjustedSlope, h);
        j["reducible"] = x;
    }
    if (f.ci) {
        const CompleteIntersection &ci = *f.ci;
        ojson x;
        ojson w5 = ojson::array();
        for (const auto &a : ci.weights)
            w5.push_back(to_string(a));
        x["weights"] = w5;
        x["index"] = to_string(ci.index);
        ojson eqs = ojson::array();
        for (const auto &eq : ci.equations)
            eqs.push_back(monomials_json(eq));
        x["equations"] = eqs;
        if (ci.displayedLhs)
            x["displayedLhs"] = to_string(*ci.displayedLhs, h);
        if (ci.mult)
            x["mult"] = *ci.mult;
        if (ci.threshold)
            x["threshold"] = to_string(*ci.threshold, h);
        x["reconstructed"] = ci.reconstructed;
        x["source"] = ci.source;
        j["ci"] = x;
    }
    if (f.crossRef)
        j["crossRef"] = *f.crossRef;
    if (f.dstar) {
        ojson x;
        x["group"] = f.dstar->group;
        x["dCoeff"] = to_string(f.dstar->dCoeff, h);
        x["hxCoeff"] = to_string(f.dstar->hxCoeff, h);
        x["validFrom"] = f.dstar->validFrom;
        x["source"] = f.dstar->source;
        j["dstar"] = x;
    }
    {
        ojson x;
        if (f.stability.statedThreshold)
            x["statedThreshold"] = *f.stability.statedThreshold;
        if (f.stability.unstableFrom)
            x["unstableFrom"] = *f.stability.unstableFrom;
        ojson known = ojson::array();
        for (const auto &e : f.stability.known) {
            ojson k;
            k["from"] = e.from;
            if (e.to)
                k["to"] = *e.to;
            k["status"] = to_string(e.status);
            k["citation"] = e.citation;
            known.push_back(k);
        }
        x["known"] = known;
        x["source"] = f.stability.source;
        j["stability"] = x;
    }
    if (f.knownAlpha) {
        j["knownAlpha"] = to_string(*f.knownAlpha);
        j["alphaSource"] = f.alphaSource;
    }
    return j;
}

ojson to_json(const Catalog &c)
{
    ojson j;
    j["format"] = kFormat;
    j["version"] = c.version;
    ojson fs = ojson::array();
    for (const auto &f : c.families)
        fs.push_back(to_json(f));
    j["families"] = fs;
    return j;
}

std::string serialize_catalog(const Catalog &c) { return to_json(c).dump(2) + "\n"; }

} // namespace dp
