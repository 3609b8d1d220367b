#include "delpezzo/catalog.hpp"
#include "delpezzo/stability.hpp"

#include "paper_tables.hpp"

#include <doctest.h>

using namespace dp;

namespace {

RatFn F(const char *s) { return parse_ratfn(s); }

const FamilySpec &fam(int no) { return reference_catalog().at(no); }

// least n0 with 3 a0 < I on every n >= n0, by scanning concrete values
std::optional<long long> scan_threshold(const FamilySpec &f, long long far = 200)
{
    std::optional<long long> last_bad;
    for (long long n = 1; n <= far; ++n) {
        BigInt a0 = f.weights[0](BigInt(n)), I = f.index(BigInt(n));
        if (!(3 * a0 < I))
            last_bad = n;
    }
    if (last_bad == far)
        return std::nullopt;
    return last_bad ? *last_bad + 1 : 1;
}

} // namespace

TEST_CASE("alpha upper bound")
{
    CHECK(alpha_upper_bound(fam(1)) == F("1/n"));
    CHECK(alpha_upper_bound(fam(22)) == F("7/(7n+5)"));
    CHECK(alpha_upper_bound(fam(23)) == RatFn(2));
}

TEST_CASE("instability threshold: stated lists")
{
    for (int no = 1; no <= 35; ++no) {
        CAPTURE(no);
        auto t = instability_threshold(fam(no));
        long long expect = golden::stated_threshold(no);
        if (expect == 0) {
            CHECK_FALSE(t);
            continue;
        }
        REQUIRE(t);
        CHECK(t->n0 == expect);
        CHECK(t->certificate.holds());
    }
}

TEST_CASE("instability threshold agrees with a scan")
{
    for (const auto &f : reference_catalog().families) {
        CAPTURE(f.no);
        auto t = instability_threshold(f);
        auto s = scan_threshold(f);
        REQUIRE(t.has_value() == s.has_value());
        if (t)
            CHECK(t->n0 == *s);
    }
}

TEST_CASE("stability_status examples")
{
    auto s6 = stability_status(fam(6), 1);
    CHECK(s6.status == KStatus::kStable);
    CHECK(s6.source == VerdictSource::catalogKnown);
    CHECK_FALSE(s6.citations.empty());

    auto s7 = stability_status(fam(7), 5);
    CHECK(s7.status == KStatus::kUnstable);
    CHECK(s7.source == VerdictSource::criterion);
    REQUIRE(s7.certificate);
    CHECK(s7.certificate->holds());

    CHECK(stability_status(fam(12), 2).status == KStatus::unknown);
    CHECK(stability_status(fam(12), 1).status == KStatus::kStable);
    CHECK(stability_status(fam(8), 2).status == KStatus::unknown);
    CHECK(stability_status(fam(8), 3).status == KStatus::unknown);
    CHECK(stability_status(fam(8), 4).status == KStatus::kUnstable);
    CHECK(stability_status(fam(23), 7).status == KStatus::kStable);
    CHECK(stability_status(fam(23), 7).source == VerdictSource::catalogKnown);
}

TEST_CASE("stability: unstable-by-citation below the criterion")
{
    // K-unstable for n > 1 while the criterion starts at 4
    auto s = stability_status(fam(6), 2);
    CHECK(s.status == KStatus::kUnstable);
    CHECK(s.source == VerdictSource::catalogKnown);
    CHECK_FALSE(s.certificate);
}

TEST_CASE("ray stability")
{
    auto r = ray_stability(fam(22), RayDomain{3});
    CHECK(r.status == KStatus::kUnstable);
    REQUIRE(r.certificate);
    CHECK(r.certificate->holds());
    CHECK(ray_stability(fam(22), RayDomain{1}).status != KStatus::kUnstable);
    CHECK(ray_stability(fam(30), RayDomain{1}).status == KStatus::kStable);
}

TEST_CASE("criterion never contradicts a recorded K-stable value")
{
    for (const auto &f : reference_catalog().families)
        for (long long n = f.ray.n0; n <= 100; ++n) {
            const KnownEntry *k = known_entry(f, n);
            auto s = stability_status(f, n);
            if (k && k->status == KStatus::kStable) {
                CAPTURE(f.no);
                CAPTURE(n);
                CHECK(s.status != KStatus::kUnstable);
            }
            if (s.source == VerdictSource::criterion)
                CHECK(s.status == KStatus::kUnstable);
        }
}

TEST_CASE("reference catalog carries no stability warnings")
{
    for (const auto &f : reference_catalog().families) {
        CAPTURE(f.no);
        CHECK(stability_warnings(f).empty());
    }
}

TEST_CASE("divergent stated threshold warns")
{
    FamilySpec f = fam(11);
    f.stability.statedThreshold = 3;
    auto w = stability_warnings(f);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("4") != std::string::npos);
    CHECK(instability_threshold(f)->n0 == 4);
}
