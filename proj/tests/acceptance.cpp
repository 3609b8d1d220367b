// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include "delpezzo/catalog.hpp"
#include "delpezzo/cli.hpp"
#include "delpezzo/cylinder.hpp"
#include "delpezzo/geometry.hpp"
#include "delpezzo/intersection.hpp"
#include "delpezzo/mutation.hpp"

#include "paper_tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace dp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void fail(const std::string &why)
    {
        ok = false;
        notes.push_back(why);
    }
};

IntPoly P(const char *s) { return parse_poly(s); }
RatFn F(const std::string &s) { return parse_ratfn(s); }
long long to_ll(const BigInt &v) { return v.convert_to<long long>(); }

const Catalog &cat() { return reference_catalog(); }
const FamilySpec &fam(int no) { return cat().at(no); }

std::string family_list(const std::vector<int> &xs)
{
    std::string s;
    for (int x : xs)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome index_column()
{
    Outcome o;
    for (const auto &row : golden::table1()) {
        const FamilySpec &f = fam(row.no);
        Weights w{P(row.w[0]), P(row.w[1]), P(row.w[2]), P(row.w[3])};
        if (compute_index(w, P(row.d)) != P(row.I) || compute_index(f.weights, f.degree) != P(row.I))
            o.fail("No. " + std::to_string(row.no));
    }
    return o;
}

bool direct_well_formed(const FamilySpec &f, long long n)
{
    std::array<long long, 4> a{};
    for (std::size_t i = 0; i < 4; ++i)
        a[i] = to_ll(f.weights[i](BigInt(n)));
    long long d = to_ll(f.degree(BigInt(n)));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long long g = std::gcd(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
            if (d % g != 0)
                return false;
            for (int k = j + 1; k < 4; ++k)
                if (std::gcd(g, a[static_cast<std::size_t>(k)]) != 1)
                    return false;
        }
    return true;
}

Outcome well_formedness()
{
    Outcome o;
    std::vector<int> uncertified, disagree;
    for (const auto &f : cat().families) {
        WellFormedness wf = check_well_formed(f.weights, f.degree, f.ray);
        if (!wf.certificate.holds())
            uncertified.push_back(f.no);
        for (long long n = std::max<long long>(1, f.ray.n0); n <= 50; ++n)
            if (wf.fails_at(n) == direct_well_formed(f, n)) {
                disagree.push_back(f.no);
                break;
            }
    }
    if (!uncertified.empty())
        o.fail("not well-formed on the ray: No. " + family_list(uncertified));
    if (!disagree.empty())
        o.fail("gcd oracle disagrees: No. " + family_list(disagree));
    else
        o.notes.push_back("gcd oracle agrees on [1, 50]");
    return o;
}

Outcome singular_strata_rows()
{
    Outcome o;
    for (const auto &row : golden::table3()) {
        const FamilySpec &f = fam(row.no);
        auto got = singular_strata(f);
        std::set<std::string> want, have;
        for (const auto &p : row.points) {
            std::string coords = p.coords;
            std::sort(coords.begin(), coords.end(), [](char a, char b) { return coord_index(a) < coord_index(b); });
            IntPoly order = coords.size() == 1 ? f.weights[static_cast<std::size_t>(coord_index(coords[0]))]
                                               : F(p.label.size() > 4 ? p.label.substr(3, p.label.size() - 4)
                                                                      : p.label.substr(2))
                                                     .num();
            want.insert(coords + " " + p.label + " " + to_string(order));
        }
        for (const auto &s : got) {
            std::string coords(1, coord_name(s.i));
            if (s.kind == StratumKind::edge)
                coords += coord_name(s.j);
            have.insert(coords + " " + s.label + " " + to_string(s.order));
        }
        if (want != have)
            o.fail("No. " + std::to_string(row.no));
    }
    return o;
}

const ExclusionCase *case_at(const std::vector<ExclusionCase> &cs, CaseRole role, const std::string &site,
                             const RatFn &threshold)
{
    for (const auto &c : cs)
        if (c.role == role && c.site == site && c.threshold == threshold)
            return &c;
    return nullptr;
}

Outcome intersection_fixtures()
{
    Outcome o;
    int values = 0;
    auto expect = [&](bool good, const std::string &what) {
        ++values;
        if (!good)
            o.fail(what);
    };
    for (const auto &row : golden::table5()) {
        const FamilySpec &f = fam(row.no);
        std::string tag = "No. " + std::to_string(row.no);
        expect(section_product(f, f.weights[0], f.index) == F(row.lhs), tag + " lhs");
        auto cs = support_cases(f);
        for (const auto &[site, thr] : row.sites) {
            const ExclusionCase *c = case_at(cs, CaseRole::hx_section, site, F(thr));
            expect(c && c->lhs == F(row.lhs), tag + " " + site);
        }
    }
    const golden::A0 a;
    const FamilySpec &f = fam(22);
    auto d = hx_decomposition(f);
    expect(d && d->lDotK == F(a.lDotK), "(A0) L.(-K)");
    expect(d && d->rDotK == F(a.rDotK), "(A0) R.(-K)");
    expect(d && d->lDotR == F(a.lDotR), "(A0) L.R");
    expect(d && d->lSq == F(a.lSq), "(A0) L^2");
    expect(d && d->rSq == F(a.rSq), "(A0) R^2");
    expect(adjunction_line_residual(f) == F(a.lDotR), "(A0) adjunction");
    auto cs = support_cases(f);
    const ExclusionCase *l = case_at(cs, CaseRole::line_meeting, "p_t", F(a.meetingThreshold));
    const ExclusionCase *r = case_at(cs, CaseRole::residual_meeting, "p_t", F(a.meetingThreshold));
    expect(l && l->lhs == F(a.lDotK), "(A2) L.D");
    expect(r && r->lhs == F(a.rDotK), "(A2) R.D");
    RatFn a3 = (F(a.adjustedNumerator) + F(a.adjustedSlopeNumerator)) / F(a.adjustedDenominator);
    expect(d && d->rDotK - d->rSq == a3, "(A3) lhs");
    const ExclusionCase *adj = case_at(cs, CaseRole::residual_adjusted, a.adjustedSite, F(a.adjustedThreshold));
    expect(adj && adj->lhs == a3, "(A3) p_{14n+3}");
    const ExclusionCase *sm = case_at(cs, CaseRole::residual_adjusted, "smooth", RatFn(1));
    expect(sm && sm->lhs == a3, "(A3) smooth");
    for (const auto &row : golden::table7()) {
        CompleteIntersection ci;
        for (const char *w : row.w)
            ci.weights.push_back(P(w));
        ci.index = P(row.I);
        std::vector<Monomial> e1, e2;
        for (const char *m : row.eq1)
            e1.push_back(parse_monomial(m, 5));
        for (const char *m : row.eq2)
            e2.push_back(parse_monomial(m, 5));
        ci.equations = {e1, e2};
        std::string tag = "Table 7, No. " + std::to_string(row.no);
        auto deg = ci_degrees(ci);
        IntPoly sum;
        for (const auto &w : ci.weights)
            sum += w;
        expect(sum - deg[0] - deg[1] == P(row.I), tag + " index");
        expect(ci_product(ci, ci.weights[0], ci.index) == F(row.lhs), tag + " lhs");
        auto rcs = support_cases(fam(row.no));
        const ExclusionCase *q = case_at(rcs, CaseRole::contraction_image, "q", F(row.threshold));
        expect(q && q->lhs == F(row.lhs), tag + " ledger");
    }
    o.notes.push_back(std::to_string(values) + " values");
    return o;
}

Outcome ledger_certification()
{
    Outcome o;
    std::size_t n = 0;
    for (int no = 1; no <= 22; ++no)
        for (const auto &c : ledger_cases(cat(), no)) {
            ++n;
            std::string tag = "No. " + std::to_string(no) + " " + c.id;
            try {
                if (!certify_cmp(c.lhs, c.threshold, Relation::le, RayDomain{3}).holds())
                    o.fail(tag + " not certified");
            } catch (const std::exception &e) {
                o.fail(tag + ": " + e.what());
            }
            OracleResult r = brute_oracle(c.lhs, c.threshold, Relation::le, 3, 1000);
            if (!r.clean() || !r.poles.empty())
                o.fail(tag + " oracle counterexample");
        }
    o.notes.push_back(std::to_string(n) + " cases");
    return o;
}

Outcome dstar_rows()
{
    Outcome o;
    for (const auto &g : golden::table4())
        for (int no : g.families) {
            try {
                DStar d = dstar(fam(no), RayDomain{3});
                if (d.dCoeff != F(g.dCoeff) || d.hxCoeff != F(g.hxCoeff))
                    o.fail("No. " + std::to_string(no) + " coefficients");
                if (!d.positivity.holds())
                    o.fail("No. " + std::to_string(no) + " positivity");
            } catch (const std::exception &e) {
                o.fail("No. " + std::to_string(no) + ": " + e.what());
            }
        }
    return o;
}

Outcome thresholds()
{
    Outcome o;
    for (const auto &f : cat().families) {
        auto t = instability_threshold(f);
        long long want = golden::stated_threshold(f.no);
        bool good = want == 0 ? !t : (t && t->n0 == want && t->certificate.holds());
        if (!good)
            o.fail("No. " + std::to_string(f.no));
        for (const auto &w : stability_warnings(f))
            o.notes.push_back("warning: " + w);
    }
    return o;
}

nlohmann::json cli_json(std::vector<const char *> args, int &code)
{
    std::ostringstream out, err;
    code = cli_main(static_cast<int>(args.size()), args.data(), out, err);
    return nlohmann::json::parse(out.str());
}

Outcome headline()
{
    Outcome o;
    int code = 0;
    auto j = cli_json({"delpezzo", "family", "22", "--ray", "3", "--format", "json"}, code);
    const auto &rep = j["reports"][0];
    if (code != kOk)
        o.fail("family 22 exit code " + std::to_string(code));
    if (rep["stability"]["status"] != "kUnstable" || rep["stability"]["source"] != "criterion" ||
        rep["stability"]["certificate"]["verdict"] != "holds")
        o.fail("family 22 stability record");
    if (rep["verdict"] != "noCylinderCertified")
        o.fail("family 22 verdict");
    // re-check every emitted inequality against the integer oracle
    for (const auto &c : rep["cases"]) {
        RatFn lhs = F(c["lhs"].get<std::string>()), rhs = F(c["rhs"].get<std::string>());
        if (c["holds"] != true || !brute_oracle(lhs, rhs, Relation::le, 3, 1000).clean())
            o.fail("family 22 case " + c["id"].get<std::string>());
    }
    auto all = cli_json({"delpezzo", "report", "--format", "json"}, code);
    std::vector<int> bad;
    for (const auto &r : all["reports"]) {
        int no = r["family"];
        if (no <= 22 && (r["verdict"] != "noCylinderCertified" || r["stability"]["status"] != "kUnstable"))
            bad.push_back(no);
    }
    if (code != kOk || !bad.empty())
        o.fail("report: No. " + family_list(bad));
    return o;
}

Outcome mutation()
{
    Outcome o;
    MutationSweep s = mutation_sweep(embedded_catalog_text(), 250, 1729);
    for (const auto &m : s.outcomes)
        if (!m.detected)
            o.fail("undetected " + m.pointer + " " + m.before + " -> " + m.after);
    o.notes.push_back(std::to_string(s.detected()) + "/" + std::to_string(s.outcomes.size()) + " detected over " +
                      std::to_string(s.leaves) + " leaves");
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char *name;
        double limit; // seconds, 0 when unpinned
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all{
        {1, "index column", 0.1, index_column},
        {2, "well-formedness", 1.0, well_formedness},
        {3, "singular strata", 0, singular_strata_rows},
        {4, "intersection fixtures", 0, intersection_fixtures},
        {5, "ledger certification", 5.0, ledger_certification},
        {6, "D*", 0, dstar_rows},
        {7, "instability thresholds", 0, thresholds},
        {8, "headline reproduction", 0, headline},
        {9, "mutation sensitivity", 0, mutation},
    };
    reference_catalog();
    int failed = 0;
    for (const auto &c : all) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit > 0 && secs >= c.limit)
            o.fail("runtime over " + std::to_string(c.limit).substr(0, 3) + " s");
        failed += o.ok ? 0 : 1;
        char head[160];
        std::snprintf(head, sizeof head, "criterion %d %s: %s (%.3f s%s)", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                      c.limit > 0 ? (", limit " + std::to_string(c.limit).substr(0, 3) + " s").c_str() : "");
        std::cout << head;
        std::size_t shown = 0;
        for (const auto &n : o.notes) {
            if (shown++ == 6) {
                std::cout << "; ...";
                break;
            }
            std::cout << "; " << n;
        }
        std::cout << "\n";
    }
    return failed;
}
