#include "delpezzo/catalog.hpp"
#include "delpezzo/cylinder.hpp"
#include "delpezzo/report.hpp"

#include "paper_tables.hpp"

#include <doctest.h>

#include <set>

using namespace dp;

namespace {

RatFn F(const char *s) { return parse_ratfn(s); }

const Catalog &cat() { return reference_catalog(); }
const FamilySpec &fam(int no) { return cat().at(no); }

const ExclusionCase *find_case(const std::vector<ExclusionCase> &cs, CaseRole role, const std::string &site)
{
    for (const auto &c : cs)
        if (c.role == role && c.site == site)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("non-lc cases")
{
    auto c1 = nonlc_cases(fam(1));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].role == CaseRole::moving_member);
    CHECK(c1[0].lhs == F("n(12n-9)/((3n-2)(6n-5))"));
    CHECK(c1[0].threshold == RatFn(1));
    CHECK(certify_case(c1[0]).holds());

    auto c22 = nonlc_cases(fam(22));
    const ExclusionCase *hy = find_case(c22, CaseRole::hy_section, "p_x");
    REQUIRE(hy);
    CHECK(hy->lhs == F("(21n+15)/(441n+70)"));
    CHECK(hy->threshold == F("1/7"));
    const ExclusionCase *m = find_case(c22, CaseRole::moving_member, "smooth");
    REQUIRE(m);
    CHECK(m->lhs == F("(21n+15)/(63n+10)"));
    CHECK(m->threshold == RatFn(1));
}

TEST_CASE("moving system degree matches the non-lc table")
{
    for (const auto &row : golden::table3()) {
        CAPTURE(row.no);
        REQUIRE(fam(row.no).moving);
        CHECK(fam(row.no).moving->degree == parse_poly(row.movingDegree));
    }
}

TEST_CASE("support case examples")
{
    auto c1 = support_cases(fam(1));
    const ExclusionCase *py = find_case(c1, CaseRole::hx_section, "p_y");
    REQUIRE(py);
    CHECK(py->lhs == F("3n/((3n-2)(6n-5))"));
    CHECK(py->threshold == F("2/(3n-2)"));
    CHECK(certify_cmp(py->lhs, py->threshold, Relation::le, RayDomain{3}).holds());

    auto c3 = support_cases(fam(3));
    const ExclusionCase *s3 = find_case(c3, CaseRole::hx_section, "smooth");
    REQUIRE(s3);
    CHECK(s3->lhs == F("2n/((4n-3)(6n-5))"));
    CHECK(certify_case(*s3).holds());

    auto c22 = support_cases(fam(22));
    const ExclusionCase *a3 = find_case(c22, CaseRole::residual_adjusted, "p_{14n+3}");
    REQUIRE(a3);
    CHECK(a3->lhs == F("(98n+14)/((28n+6)(63n+10))"));
    CHECK(a3->threshold == F("1/(14n+3)"));
    const ExclusionCase *a4 = find_case(c22, CaseRole::contraction_image, "q");
    REQUIRE(a4);
    CHECK(a4->lhs == F("(14n+10)/((14n+3)(84n+11))"));
    CHECK(a4->threshold == F("3/(84n+11)"));
    CHECK(certify_case(*a4).holds());
}

TEST_CASE("family 1 smooth case fails on n >= 1 with witness 1")
{
    auto cs = support_cases(fam(1));
    const ExclusionCase *s = find_case(cs, CaseRole::hx_section, "smooth");
    REQUIRE(s);
    Certificate c = certify_cmp(s->lhs, s->threshold, Relation::le, RayDomain{1});
    CHECK_FALSE(c.holds());
    REQUIRE(c.witness);
    CHECK(*c.witness == 1);
}

TEST_CASE("every ledger case certifies on n >= 3 and survives the oracle")
{
    for (int no = 1; no <= 22; ++no) {
        CAPTURE(no);
        auto cs = ledger_cases(cat(), no);
        CHECK_FALSE(cs.empty());
        for (const auto &c : cs) {
            CAPTURE(c.id);
            CHECK(certify_cmp(c.lhs, c.threshold, Relation::le, RayDomain{3}).holds());
            OracleResult o = brute_oracle(c.lhs, c.threshold, Relation::le, 3, 400);
            CHECK(o.clean());
            CHECK(o.poles.empty());
        }
    }
}

TEST_CASE("unmarked sites produce both the 1/r and 2/r variants")
{
    auto cs = support_cases(fam(13));
    std::set<std::string> ids;
    for (const auto &c : cs)
        ids.insert(c.id);
    for (const auto &c : cs)
        if (c.reconstructed && c.id.size() > 3 && c.id.substr(c.id.size() - 3) == "/1r")
            CHECK(ids.count(c.id.substr(0, c.id.size() - 3) + "/2r") == 1);
}

TEST_CASE("cross-referenced family includes the target's ledger")
{
    REQUIRE(fam(2).crossRef);
    auto cs = ledger_cases(cat(), 2);
    auto target = support_cases(fam(*fam(2).crossRef));
    std::size_t from_target = 0;
    for (const auto &c : cs)
        from_target += c.id.rfind("family ", 0) == 0 ? 1 : 0;
    CHECK(from_target == target.size());
}

TEST_CASE("D* groups")
{
    for (const auto &g : golden::table4())
        for (int no : g.families) {
            CAPTURE(no);
            DStar d = dstar(fam(no), RayDomain{3});
            CHECK(d.dCoeff == F(g.dCoeff));
            CHECK(d.hxCoeff == F(g.hxCoeff));
            CHECK(d.positivity.holds());
            REQUIRE(fam(no).dstar);
            CHECK(d.validityRay.n0 == fam(no).dstar->validFrom);
            // I - 2a0 > 0 exactly from validFrom, by direct evaluation
            IntPoly gap = fam(no).index - fam(no).weights[0] * 2;
            for (long long n = 1; n < 30; ++n)
                CHECK((gap(BigInt(n)) > 0) == (n >= d.validityRay.n0));
        }
}

TEST_CASE("D* examples")
{
    CHECK(dstar(fam(1)).dCoeff == F("n/(n-2)"));
    CHECK(dstar(fam(21)).hxCoeff == F("2(7n+6)/(7n-8)"));
    CHECK_THROWS_AS(dstar_at(fam(1), 2), DStarInvalid);
    CHECK_THROWS_AS(dstar(fam(1), RayDomain{2}), DStarInvalid);
    CHECK_THROWS_AS(dstar(fam(23)), DStarInvalid);
}

TEST_CASE("applicable rays")
{
    for (int no = 1; no <= 22; ++no) {
        long long t = golden::stated_threshold(no);
        CHECK(applicable_ray(fam(no)).n0 == std::max(3LL, t));
    }
    CHECK(applicable_ray(fam(30)) == fam(30).ray);
}

TEST_CASE("reports for families 1 to 22 on their applicable rays")
{
    for (int no = 1; no <= 22; ++no) {
        CAPTURE(no);
        LedgerReport r = cylinder_report(cat(), no);
        CHECK(r.verdict == CylinderVerdict::noCylinderCertified);
        CHECK(r.failures.empty());
        CHECK(r.stability.status == KStatus::kUnstable);
        REQUIRE(r.dstar);
        for (const auto &p : r.prerequisites)
            CHECK(p.holds());
    }
}

TEST_CASE("family 22 on n >= 3")
{
    LedgerReport r = cylinder_report(cat(), 22, Query{RayDomain{3}, std::nullopt});
    CHECK(r.verdict == CylinderVerdict::noCylinderCertified);
    CHECK(r.stability.status == KStatus::kUnstable);
    CHECK(r.stability.source == VerdictSource::criterion);
    REQUIRE(r.stability.certificate);
    CHECK(r.stability.certificate->holds());
    CHECK_FALSE(r.reconstructed);
    bool lambda = false;
    for (const auto &p : r.prerequisites)
        lambda = lambda || p.what.find("lambda") != std::string::npos;
    CHECK(lambda);

    auto j = to_json(r);
    CHECK(j["verdict"] == "noCylinderCertified");
    CHECK(j["stability"]["status"] == "kUnstable");
}

TEST_CASE("families without ledgers")
{
    LedgerReport r = cylinder_report(cat(), 23);
    CHECK(r.verdict == CylinderVerdict::noCylinderByAlpha);
    CHECK_FALSE(r.alphaCitation.empty());
    CHECK(r.cases.empty());
}

TEST_CASE("family 1 at n = 2 is outside the theorem")
{
    LedgerReport r = cylinder_report(cat(), 1, Query{std::nullopt, 2});
    CHECK(r.verdict == CylinderVerdict::notCertified);
    CHECK_FALSE(r.failures.empty());
    CHECK(r.stability.status == KStatus::kStable);
    CHECK_THROWS_AS(cylinder_report(cat(), 1, Query{std::nullopt, 0}), std::invalid_argument);
}

TEST_CASE("concrete n agrees with the ray certificate")
{
    for (int no : {1, 9, 14, 22})
        for (long long n = 4; n < 12; ++n) {
            LedgerReport r = cylinder_report(cat(), no, Query{std::nullopt, n});
            CHECK(r.verdict == CylinderVerdict::noCylinderCertified);
        }
}

TEST_CASE("oracle sweep is clean and clipped to rays")
{
    for (int no = 1; no <= 22; ++no)
        for (const auto &o : oracle_sweep(cat(), no, 1, 300)) {
            CHECK(o.from >= o.c.ray.n0);
            CHECK(o.result.clean());
            CHECK(o.result.poles.empty());
        }
}
