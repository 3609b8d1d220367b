#include "delpezzo/report.hpp"

#include <map>
#include <sstream>

namespace dp {

using ojson = nlohmann::ordered_json;

namespace {

std::string verdict_word(const Certificate &c)
{
    std::string s = c.holds() ? "holds" : "fails";
    s += std::string(" (") + to_string(c.method);
    if (c.witness)
        s += ", n = " + std::to_string(*c.witness);
    return s + ")";
}

ojson query_json(const Query &q)
{
    ojson j;
    if (q.n)
        j["n"] = *q.n;
    else
        j["ray"] = q.ray ? q.ray->n0 : 1;
    j["text"] = q.text();
    return j;
}

std::string md_escape(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else
            out += c;
    }
    return out;
}

std::string weights_text(const std::vector<IntPoly> &w)
{
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? ", " : "") + to_string(w[k]);
    return s + ")";
}

std::string equation_text(const std::vector<Monomial> &eq)
{
    std::string s;
    for (std::size_t k = 0; k < eq.size(); ++k)
        s += (k ? ", " : "") + to_string(eq[k]);
    return "{" + s + "}";
}

} // namespace

ojson to_json(const ExclusionCase &c)
{
    ojson j;
    j["id"] = c.id;
    j["family"] = c.family;
    j["role"] = to_string(c.role);
    j["site"] = c.site;
    j["expression"] = c.expression;
    j["lhs"] = to_string(c.lhs, c.hints);
    j["relation"] = to_string(Relation::le);
    j["rhs"] = to_string(c.threshold, c.hints);
    if (c.mult)
        j["mult"] = *c.mult;
    j["order"] = to_string(c.order);
    if (c.displayedLhs)
        j["displayedLhs"] = to_string(*c.displayedLhs, c.hints);
    if (c.displayedThreshold)
        j["displayedThreshold"] = to_string(*c.displayedThreshold, c.hints);
    j["governing"] = c.governing;
    j["source"] = c.source;
    j["reconstructed"] = c.reconstructed;
    j["ray"] = c.ray.n0;
    return j;
}

ojson to_json(const LedgerReport &r)
{
    ojson j;
    j["family"] = r.family;
    j["query"] = query_json(r.query);
    ojson st;
    st["status"] = to_string(r.stability.status);
    st["source"] = to_string(r.stability.source);
    st["citations"] = r.stability.citations;
    if (r.stability.certificate)
        st["certificate"] = to_json(*r.stability.certificate);
    j["stability"] = st;
    if (r.threshold) {
        ojson t;
        t["n0"] = r.threshold->n0;
        t["certificate"] = to_json(r.threshold->certificate);
        j["instabilityThreshold"] = t;
    } else {
        j["instabilityThreshold"] = nullptr;
    }
    j["verdict"] = to_string(r.verdict);
    if (!r.alphaCitation.empty())
        j["alphaCitation"] = r.alphaCitation;
    j["reconstructed"] = r.reconstructed;
    ojson cases = ojson::array();
    for (const auto &cr : r.cases) {
        ojson c = to_json(cr.c);
        if (cr.certificate)
            c["certificate"] = to_json(*cr.certificate);
        if (!cr.error.empty())
            c["error"] = cr.error;
        c["holds"] = cr.holds();
        cases.push_back(c);
    }
    j["cases"] = cases;
    ojson pre = ojson::array();
    for (const auto &p : r.prerequisites) {
        ojson x;
        x["what"] = p.what;
        if (p.certificate)
            x["certificate"] = to_json(*p.certificate);
        if (!p.error.empty())
            x["error"] = p.error;
        x["holds"] = p.holds();
        pre.push_back(x);
    }
    j["prerequisites"] = pre;
    if (r.dstar) {
        ojson d;
        d["dCoeff"] = to_string(r.dstar->dCoeff);
        d["hxCoeff"] = to_string(r.dstar->hxCoeff);
        d["validFrom"] = r.dstar->validityRay.n0;
        d["positivity"] = to_json(r.dstar->positivity);
        j["dstar"] = d;
    }
    j["warnings"] = r.warnings;
    j["failures"] = r.failures;
    return j;
}

std::string to_markdown(const LedgerReport &r, const Catalog &cat)
{
    const FamilySpec &f = cat.at(r.family);
    auto h = display_hints(f);
    std::ostringstream o;
    o << "### No. " << r.family << "\n\n";
    o << "P" << weights_text(f.weight_list()) << ", d = " << to_string(f.degree) << ", I = " << to_string(f.index)
      << "; " << r.query.text() << "\n\n";
    o << "- K-stability: " << to_string(r.stability.status) << " (" << to_string(r.stability.source) << ")";
    if (r.stability.certificate)
        o << ", " << r.stability.certificate->claim_text << " " << verdict_word(*r.stability.certificate);
    for (const auto &c : r.stability.citations)
        o << "; " << c;
    o << "\n";
    o << "- Cylinder: " << to_string(r.verdict);
    if (!r.alphaCitation.empty())
        o << " (" << r.alphaCitation << ")";
    if (r.reconstructed)
        o << "; includes reconstructed cases";
    o << "\n";
    if (r.dstar)
        o << "- D* = " << to_string(r.dstar->dCoeff, h) << " D - " << to_string(r.dstar->hxCoeff, h)
          << " H_x, defined for n >= " << r.dstar->validityRay.n0 << "\n";
    for (const auto &w : r.warnings)
        o << "- warning: " << w << "\n";

    if (!r.cases.empty()) {
        o << "\n| case | measured | lhs | site | threshold | source | certificate |\n";
        o << "|---|---|---|---|---|---|---|\n";
        for (const auto &cr : r.cases) {
            const ExclusionCase &c = cr.c;
            o << "| " << md_escape(c.id) << (c.reconstructed ? " (reconstructed)" : "") << " | "
              << md_escape(c.expression) << " | " << to_string(c.lhs, c.hints) << " | " << c.site << " | "
              << to_string(c.threshold, c.hints) << " | " << md_escape(c.source) << " | "
              << (cr.certificate ? verdict_word(*cr.certificate) : "ill-posed: " + cr.error) << " |\n";
        }
    }
    if (f.ci && f.ci->mult) {
        const CompleteIntersection &ci = *f.ci;
        o << "\nY in P" << weights_text(ci.weights) << ", I = " << to_string(ci.index)
          << "; equations supported on " << equation_text(ci.equations[0]) << " and "
          << equation_text(ci.equations[1]) << "\n";
    }
    if (!r.prerequisites.empty()) {
        o << "\n";
        for (const auto &p : r.prerequisites)
            o << "- " << p.what << ": "
              << (p.certificate ? verdict_word(*p.certificate) : "ill-posed: " + p.error) << "\n";
    }
    for (const auto &x : r.failures)
        o << "- failure: " << x << "\n";
    o << "\n";
    return o.str();
}

ojson stability_table_json(const Catalog &cat)
{
    ojson rows = ojson::array();
    for (const auto &f : cat.families) {
        ojson j;
        j["no"] = f.no;
        j["a0"] = to_string(f.weights[0]);
        j["index"] = to_string(f.index);
        j["alphaUpperBound"] = to_string(alpha_upper_bound(f));
        auto t = instability_threshold(f);
        if (t) {
            j["criterionFrom"] = t->n0;
            j["certificate"] = to_json(t->certificate);
        } else {
            j["criterionFrom"] = nullptr;
        }
        if (f.stability.unstableFrom)
            j["unstableFrom"] = *f.stability.unstableFrom;
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
        j["known"] = known;
        j["warnings"] = stability_warnings(f);
        rows.push_back(j);
    }
    return rows;
}

std::string stability_table_markdown(const Catalog &cat)
{
    std::ostringstream o;
    o << "| No. | (a0, I, a0/I) | K-unstable | criterion 3a0/I < 1 | lower indices |\n";
    o << "|---|---|---|---|---|\n";
    for (const auto &f : cat.families) {
        auto t = instability_threshold(f);
        o << "| " << f.no << " | (" << to_string(f.weights[0]) << ", " << to_string(f.index) << ", "
          << to_string(alpha_upper_bound(f)) << ") | ";
        if (f.stability.unstableFrom)
            o << "n >= " << *f.stability.unstableFrom;
        o << " | " << (t ? "n >= " + std::to_string(t->n0) : std::string("never")) << " | ";
        bool first = true;
        for (const auto &e : f.stability.known) {
            if (t && e.from >= t->n0)
                continue;
            o << (first ? "" : "; ") << to_string(e.status) << " for n in [" << e.from << ", "
              << (e.to ? std::to_string(*e.to) : std::string("inf")) << "]";
            first = false;
        }
        o << " |\n";
    }
    return o.str();
}

ojson dstar_table_json(const Catalog &cat)
{
    std::map<std::string, std::vector<int>> groups;
    std::vector<std::string> order;
    for (const auto &f : cat.families) {
        if (!f.dstar)
            continue;
        if (!groups.count(f.dstar->group))
            order.push_back(f.dstar->group);
        groups[f.dstar->group].push_back(f.no);
    }
    ojson rows = ojson::array();
    for (const auto &g : order) {
        const FamilySpec &f = cat.at(groups[g].front());
        ojson j;
        j["group"] = g;
        j["families"] = groups[g];
        try {
            DStar d = dstar(f, RayDomain{f.dstar->validFrom});
            j["dCoeff"] = to_string(d.dCoeff);
            j["hxCoeff"] = to_string(d.hxCoeff);
            j["validFrom"] = d.validityRay.n0;
            j["positivity"] = to_json(d.positivity);
        } catch (const DStarInvalid &e) {
            j["error"] = e.what();
        }
        rows.push_back(j);
    }
    return rows;
}

std::string dstar_table_markdown(const Catalog &cat)
{
    std::ostringstream o;
    o << "| No. | D* | defined for |\n|---|---|---|\n";
    for (const auto &row : dstar_table_json(cat)) {
        o << "| " << row["group"].get<std::string>() << " | ";
        if (row.contains("error")) {
            o << row["error"].get<std::string>() << " | |\n";
            continue;
        }
        o << row["dCoeff"].get<std::string>() << " D - " << row["hxCoeff"].get<std::string>() << " H_x | n >= "
          << row["validFrom"].get<long long>() << " |\n";
    }
    return o.str();
}

std::vector<CaseOracle> oracle_sweep(const Catalog &cat, int no, long long a, long long b)
{
    std::vector<CaseOracle> out;
    for (auto &c : ledger_cases(cat, no)) {
        CaseOracle o;
        o.from = std::max(a, c.ray.n0);
        o.to = b;
        if (o.from <= o.to)
            o.result = brute_oracle(c.lhs, c.threshold, Relation::le, o.from, o.to);
        o.c = std::move(c);
        out.push_back(std::move(o));
    }
    return out;
}

ojson to_json(const CaseOracle &o)
{
    ojson j;
    j["id"] = o.c.id;
    j["source"] = o.c.source;
    j["claim"] = claim_text(o.c.lhs, Relation::le, o.c.threshold, o.c.hints);
    j["range"] = {o.from, o.to};
    j["counterexamples"] = o.result.counterexamples;
    j["poles"] = o.result.poles;
    j["clean"] = o.result.clean() && o.result.poles.empty();
    return j;
}

} // namespace dp
