#include "delpezzo/cylinder.hpp"

#include <algorithm>

namespace dp {

namespace {

std::string fam(const FamilySpec &f) { return "family " + std::to_string(f.no); }

IntPoly site_order(const FamilySpec &f, const std::string &site)
{
    if (site == "smooth")
        return IntPoly(1);
    if (site == "q") {
        if (!f.ci || f.ci->weights.size() != 5)
            throw LedgerError(fam(f) + ": site q needs a complete-intersection model");
        return f.ci->weights[4];
    }
    const SingularStratum *s = f.stratum(site);
    if (!s)
        throw LedgerError(fam(f) + ": site " + site + " is not a recorded stratum");
    return s->order;
}

std::string governing_for(const std::string &site)
{
    return site == "smooth" ? "multiplicity bound at a smooth point" : "multiplicity bound at a cyclic quotient point";
}

struct BlockSpec {
    CaseRole role;
    std::string prefix;
    std::string expression;
    RatFn lhs;
};

void add_block(std::vector<ExclusionCase> &out, const FamilySpec &f, const SectionBlock &b, const BlockSpec &spec,
               const std::string &governing = {})
{
    auto hints = display_hints(f);
    for (const auto &sb : b.sites) {
        IntPoly order = site_order(f, sb.site);
        std::vector<int> mults;
        if (sb.mult)
            mults.push_back(*sb.mult);
        else
            mults = {1, 2};
        for (int m : mults) {
            ExclusionCase c;
            c.id = spec.prefix + "/" + sb.site + (sb.mult ? "" : "/" + std::to_string(m) + "r");
            c.family = f.no;
            c.role = spec.role;
            c.site = sb.site;
            c.lhs = spec.lhs;
            c.threshold = RatFn(IntPoly(m), order);
            c.mult = m;
            c.order = order;
            c.expression = spec.expression;
            c.governing = governing.empty() ? governing_for(sb.site) : governing;
            c.source = b.source;
            c.reconstructed = b.reconstructed || !sb.mult;
            c.ray = table_ray(f);
            c.hints = hints;
            c.displayedLhs = b.displayedLhs;
            if (sb.mult)
                c.displayedThreshold = sb.threshold;
            out.push_back(std::move(c));
        }
    }
}

bool has_ledger(const FamilySpec &f) { return f.support.has_value(); }

Certificate certify_on(const ExclusionCase &c, const Query &q)
{
    if (q.n)
        return certify_case_at(c, *q.n);
    return certify_cmp(c.lhs, c.threshold, Relation::le, q.ray.value_or(c.ray));
}

Prerequisite check(const std::string &what, const RatFn &lhs, Relation rel, const RatFn &rhs, const Query &q)
{
    Prerequisite p;
    p.what = what;
    try {
        p.certificate = q.n ? certify_at(lhs, rhs, rel, *q.n) : certify_cmp(lhs, rhs, rel, *q.ray);
    } catch (const std::domain_error &e) {
        p.error = e.what();
    }
    return p;
}

} // namespace

const char *to_string(CaseRole r)
{
    switch (r) {
    case CaseRole::moving_member:
        return "moving_member";
    case CaseRole::hy_section:
        return "hy_section";
    case CaseRole::hy_lct:
        return "hy_lct";
    case CaseRole::hx_section:
        return "hx_section";
    case CaseRole::line_meeting:
        return "line_meeting";
    case CaseRole::residual_meeting:
        return "residual_meeting";
    case CaseRole::residual_adjusted:
        return "residual_adjusted";
    case CaseRole::contraction_image:
        return "contraction_image";
    }
    return "?";
}

const char *to_string(CylinderVerdict v)
{
    switch (v) {
    case CylinderVerdict::noCylinderCertified:
        return "noCylinderCertified";
    case CylinderVerdict::noCylinderByAlpha:
        return "noCylinderByAlpha";
    case CylinderVerdict::notCertified:
        return "notCertified";
    }
    return "?";
}

std::vector<ExclusionCase> nonlc_cases(const FamilySpec &f)
{
    if (!f.moving)
        throw LedgerError(fam(f) + ": missing moving linear system");
    std::vector<ExclusionCase> out;
    add_block(out, f, f.moving->block,
              {CaseRole::moving_member, "moving", "M . D", section_product(f, f.moving->degree, f.index)},
              "multiplicity bound for a member of the moving system");
    if (f.hy) {
        const HySection &h = *f.hy;
        add_block(out, f, h.block, {CaseRole::hy_section, "hy", "H_y . D", section_product(f, f.weights[1], f.index)});
        ExclusionCase c;
        c.id = "hy-lct";
        c.family = f.no;
        c.role = CaseRole::hy_lct;
        c.site = "H_y";
        c.lhs = RatFn(f.index, f.weights[1]);
        c.threshold = RatFn(IntPoly(BigInt(numerator(h.lct))), IntPoly(BigInt(denominator(h.lct))));
        c.expression = "coefficient of H_y in D";
        c.governing = "log canonical threshold of H_y";
        c.source = h.lctSource;
        c.reconstructed = h.block.reconstructed;
        c.ray = table_ray(f);
        c.hints = display_hints(f);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ExclusionCase> support_cases(const FamilySpec &f)
{
    if (!f.support)
        throw LedgerError(fam(f) + ": missing support data");
    std::vector<ExclusionCase> out;
    const IntPoly &a0 = f.weights[0];
    add_block(out, f, *f.support,
              {CaseRole::hx_section, "support", f.support->divisor + " . D", section_product(f, a0, f.index)});
    if (f.hx == HxShape::irreducible || f.crossRef)
        return out;
    if (!f.decomposition || !f.reducible || !f.ci)
        throw LedgerError(fam(f) + ": reducible H_x without decomposition, ledger or complete-intersection data");
    DecompositionData dd = *hx_decomposition(f);
    const ReducibleLedger &r = *f.reducible;
    SectionBlock meet;
    meet.sites.push_back({r.meetingSite, 1, std::nullopt});
    meet.source = r.meetingSource;
    meet.reconstructed = r.meetingReconstructed;
    meet.displayedLhs = r.lineLhs;
    add_block(out, f, meet, {CaseRole::line_meeting, "meeting/L", "L . D", dd.lDotK});
    meet.displayedLhs = r.residualLhs;
    add_block(out, f, meet, {CaseRole::residual_meeting, "meeting/R", "R . D", dd.rDotK});
    add_block(out, f, r.adjusted,
              {CaseRole::residual_adjusted, "adjusted", "R . (D - R)", dd.rDotK - dd.rSq},
              "inversion of adjunction on R");
    if (f.ci->mult) {
        SectionBlock ci;
        ci.sites.push_back({"q", f.ci->mult, f.ci->threshold});
        ci.source = f.ci->source;
        ci.reconstructed = f.ci->reconstructed;
        ci.displayedLhs = f.ci->displayedLhs;
        add_block(out, f, ci,
                  {CaseRole::contraction_image, "contraction", "R' . D'", ci_product(*f.ci, f.ci->weights[0], f.ci->index)},
                  "multiplicity bound at the contracted point");
    }
    return out;
}

Certificate certify_case(const ExclusionCase &c) { return certify_cmp(c.lhs, c.threshold, Relation::le, c.ray); }

Certificate certify_case_at(const ExclusionCase &c, long long n)
{
    return certify_at(c.lhs, c.threshold, Relation::le, n);
}

DStar dstar(const FamilySpec &f, std::optional<RayDomain> ray)
{
    IntPoly g = f.index - f.weights[0] * 2;
    std::optional<long long> from = minimal_threshold(RatFn(g), RatFn(0), Relation::gt);
    if (!from || g.is_zero())
        throw DStarInvalid(f.ray.n0, fam(f) + ": I - 2a0 = " + to_string(g) + " is never positive on a ray");
    RayDomain r = ray.value_or(table_ray(f));
    DStar d;
    d.dCoeff = RatFn(f.index, g);
    d.hxCoeff = RatFn(f.index * 2, g);
    d.validityRay = RayDomain{*from};
    d.positivity = certify_cmp(RatFn(g), RatFn(0), Relation::gt, r);
    if (!d.positivity.holds())
        throw DStarInvalid(*d.positivity.witness, fam(f) + ": I - 2a0 = " + to_string(g) + " is not positive at n = " +
                                                      std::to_string(*d.positivity.witness));
    return d;
}

DStar dstar_at(const FamilySpec &f, long long n)
{
    IntPoly g = f.index - f.weights[0] * 2;
    Certificate c = certify_at(RatFn(g), RatFn(0), Relation::gt, n);
    if (!c.holds())
        throw DStarInvalid(n, fam(f) + ": I - 2a0 = " + g(BigInt(n)).str() + " at n = " + std::to_string(n) +
                                  ", so D* is undefined");
    DStar d;
    d.dCoeff = RatFn(f.index, g);
    d.hxCoeff = RatFn(f.index * 2, g);
    d.validityRay = RayDomain{minimal_threshold(RatFn(g), RatFn(0), Relation::gt).value_or(n)};
    d.positivity = std::move(c);
    return d;
}

RayDomain applicable_ray(const FamilySpec &f)
{
    if (!has_ledger(f))
        return f.ray;
    long long n0 = 3;
    if (auto t = instability_threshold(f))
        n0 = std::max(n0, t->n0);
    return RayDomain{std::max(n0, f.ray.n0)};
}

std::string Query::text() const
{
    if (n)
        return "n = " + std::to_string(*n);
    return "n >= " + std::to_string(ray ? ray->n0 : 1);
}

std::vector<ExclusionCase> ledger_cases(const Catalog &cat, int no)
{
    const FamilySpec &f = cat.at(no);
    std::vector<ExclusionCase> out = nonlc_cases(f);
    for (auto &c : support_cases(f))
        out.push_back(std::move(c));
    if (f.crossRef) {
        const FamilySpec &g = cat.at(*f.crossRef);
        for (auto c : support_cases(g)) {
            c.id = "family " + std::to_string(g.no) + "/" + c.id;
            out.push_back(std::move(c));
        }
    }
    return out;
}

LedgerReport cylinder_report(const Catalog &cat, int no, Query q)
{
    const FamilySpec &f = cat.at(no);
    if (q.n && *q.n < f.ray.n0)
        throw std::invalid_argument(fam(f) + ": n = " + std::to_string(*q.n) + " is off the weight ray n >= " +
                                    std::to_string(f.ray.n0));
    if (q.ray && q.ray->n0 < f.ray.n0)
        throw std::invalid_argument(fam(f) + ": ray n >= " + std::to_string(q.ray->n0) +
                                    " leaves the weight ray n >= " + std::to_string(f.ray.n0));
    if (!q.n && !q.ray)
        q.ray = applicable_ray(f);

    LedgerReport rep;
    rep.family = no;
    rep.query = q;
    rep.stability = q.n ? stability_status(f, *q.n) : ray_stability(f, *q.ray);
    rep.threshold = instability_threshold(f);
    rep.warnings = stability_warnings(f);

    if (!has_ledger(f)) {
        if (f.knownAlpha && *f.knownAlpha >= 1) {
            rep.verdict = CylinderVerdict::noCylinderByAlpha;
            rep.alphaCitation = f.alphaSource;
        } else {
            rep.verdict = CylinderVerdict::notCertified;
            rep.failures.push_back("no exclusion ledger and no alpha-invariant at least 1");
        }
        return rep;
    }

    std::vector<ExclusionCase> cases;
    try {
        cases = ledger_cases(cat, no);
    } catch (const LedgerError &e) {
        rep.failures.push_back(e.what());
    }
    for (auto &c : cases) {
        CaseResult r;
        r.c = std::move(c);
        try {
            r.certificate = certify_on(r.c, q);
        } catch (const std::domain_error &e) {
            r.error = e.what();
        }
        if (!r.holds())
            rep.failures.push_back("case " + r.c.id + (r.error.empty() ? " fails" : ": " + r.error) +
                                   (r.certificate && r.certificate->witness
                                        ? " at n = " + std::to_string(*r.certificate->witness)
                                        : ""));
        rep.reconstructed = rep.reconstructed || r.c.reconstructed;
        rep.cases.push_back(std::move(r));
    }

    if (f.reducible && !f.reducible->adjusted.sites.empty() && f.decomposition) {
        try {
            DecompositionData dd = *hx_decomposition(f);
            rep.prerequisites.push_back(check("R^2 < 0, so lambda = 1 is the worst case", dd.rSq, Relation::lt, RatFn(0), q));
        } catch (const std::invalid_argument &e) {
            rep.prerequisites.push_back({"R^2 < 0, so lambda = 1 is the worst case", std::nullopt, e.what()});
        }
    }
    IntPoly g = f.index - f.weights[0] * 2;
    rep.prerequisites.push_back(check("I - 2a0 > 0, so D* is defined", RatFn(g), Relation::gt, RatFn(0), q));
    try {
        rep.dstar = q.n ? dstar_at(f, *q.n) : dstar(f, *q.ray);
    } catch (const DStarInvalid &) {
    }
    for (const auto &p : rep.prerequisites)
        if (!p.holds())
            rep.failures.push_back("prerequisite " + p.what + (p.error.empty() ? " fails" : ": " + p.error) +
                                   (p.certificate && p.certificate->witness
                                        ? " at n = " + std::to_string(*p.certificate->witness)
                                        : ""));
    rep.verdict = rep.failures.empty() ? CylinderVerdict::noCylinderCertified : CylinderVerdict::notCertified;
    return rep;
}

} // namespace dp
