#include "delpezzo/stability.hpp"

#include <algorithm>

namespace dp {

namespace {

RatFn criterion_lhs(const FamilySpec &f) { return RatFn(f.weights[0] * 3, f.index); }

} // namespace

const char *to_string(VerdictSource s)
{
    switch (s) {
    case VerdictSource::criterion:
        return "criterion";
    case VerdictSource::catalogKnown:
        return "catalogKnown";
    case VerdictSource::combined:
        return "criterion+catalogKnown";
    case VerdictSource::none:
        return "none";
    }
    return "none";
}

RatFn alpha_upper_bound(const FamilySpec &f) { return RatFn(f.weights[0], f.index); }

std::optional<InstabilityThreshold> instability_threshold(const FamilySpec &f)
{
    RatFn lhs = criterion_lhs(f);
    std::optional<long long> t = minimal_threshold(lhs, RatFn(1), Relation::lt);
    if (!t)
        return std::nullopt;
    InstabilityThreshold out;
    out.n0 = *t;
    out.certificate = certify_cmp(lhs, RatFn(1), Relation::lt, RayDomain{*t});
    return out;
}

const KnownEntry *known_entry(const FamilySpec &f, long long n)
{
    for (const auto &e : f.stability.known)
        if (n >= e.from && (!e.to || n <= *e.to))
            return &e;
    return nullptr;
}

StabilityVerdict stability_status(const FamilySpec &f, long long n)
{
    StabilityVerdict v;
    Certificate c = certify_at(criterion_lhs(f), RatFn(1), Relation::lt, n);
    if (c.holds()) {
        v.status = KStatus::kUnstable;
        v.source = VerdictSource::criterion;
        v.certificate = std::move(c);
        return v;
    }
    if (const KnownEntry *e = known_entry(f, n)) {
        v.status = e->status;
        v.source = VerdictSource::catalogKnown;
        v.citations.push_back(e->citation);
    }
    return v;
}

StabilityVerdict ray_stability(const FamilySpec &f, RayDomain ray)
{
    StabilityVerdict v;
    auto t = instability_threshold(f);
    if (t) {
        long long from = std::max(ray.n0, t->n0);
        bool covered = true;
        std::vector<std::string> cites;
        for (long long n = ray.n0; n < from && covered; ++n) {
            const KnownEntry *e = known_entry(f, n);
            covered = e && e->status == KStatus::kUnstable;
            if (covered && std::find(cites.begin(), cites.end(), e->citation) == cites.end())
                cites.push_back(e->citation);
        }
        if (covered) {
            v.status = KStatus::kUnstable;
            v.certificate = certify_cmp(criterion_lhs(f), RatFn(1), Relation::lt, RayDomain{from});
            v.citations = std::move(cites);
            v.source = v.citations.empty() ? VerdictSource::criterion : VerdictSource::combined;
            return v;
        }
        return v;
    }
    for (const auto &e : f.stability.known) {
        if (!e.to && e.from <= ray.n0) {
            v.status = e.status;
            v.source = VerdictSource::catalogKnown;
            v.citations.push_back(e.citation);
        }
    }
    return v;
}

std::vector<std::string> stability_warnings(const FamilySpec &f)
{
    std::vector<std::string> w;
    auto t = instability_threshold(f);
    std::string who = "family " + std::to_string(f.no);
    if (f.stability.statedThreshold && (!t || t->n0 != *f.stability.statedThreshold))
        w.push_back(who + ": stated instability threshold n >= " + std::to_string(*f.stability.statedThreshold) +
                    " differs from the computed " + (t ? "n >= " + std::to_string(t->n0) : std::string("none")));
    if (!f.stability.statedThreshold && t)
        w.push_back(who + ": criterion holds from n = " + std::to_string(t->n0) + " but no threshold is stated");
    return w;
}

} // namespace dp
