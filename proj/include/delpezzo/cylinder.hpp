#pragma once

#include "delpezzo/intersection.hpp"
#include "delpezzo/stability.hpp"

namespace dp {

// Missing or inconsistent ledger data for a family.
struct LedgerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CaseRole {
    moving_member,
    hy_section,
    hy_lct,
    hx_section,
    line_meeting,
    residual_meeting,
    residual_adjusted,
    contraction_image,
};
const char *to_string(CaseRole r);

// One absurd inequality: lhs <= threshold on the ray excludes the case.
struct ExclusionCase {
    std::string id;
    int family = 0;
    CaseRole role = CaseRole::hx_section;
    std::string site; // "smooth", a stratum label, "q" or "H_y"
    RatFn lhs;
    RatFn threshold;
    std::optional<int> mult;
    IntPoly order{1};
    std::string expression; // what lhs measures, e.g. "H_x . D"
    std::string governing;
    std::string source;
    bool reconstructed = false;
    RayDomain ray;
    std::vector<IntPoly> hints;
    std::optional<RatFn> displayedLhs, displayedThreshold;
};

std::vector<ExclusionCase> nonlc_cases(const FamilySpec &f);
std::vector<ExclusionCase> support_cases(const FamilySpec &f);

Certificate certify_case(const ExclusionCase &c);
Certificate certify_case_at(const ExclusionCase &c, long long n);

struct DStarInvalid : std::domain_error {
    DStarInvalid(long long at, const std::string &what) : std::domain_error(what), at(at) {}
    long long at;
};

struct DStar {
    RatFn dCoeff;  // I / (I - 2 a0)
    RatFn hxCoeff; // 2 I / (I - 2 a0)
    RayDomain validityRay;
    Certificate positivity; // I - 2 a0 > 0 on the queried ray
};

// Throws DStarInvalid when I - 2 a0 <= 0 somewhere on the ray.
DStar dstar(const FamilySpec &f, std::optional<RayDomain> ray = std::nullopt);
DStar dstar_at(const FamilySpec &f, long long n);

// n >= max(instability threshold, 3) for families with ledgers, the
// weight ray otherwise.
RayDomain applicable_ray(const FamilySpec &f);

struct Query {
    std::optional<RayDomain> ray;
    std::optional<long long> n;
    std::string text() const;
};

struct CaseResult {
    ExclusionCase c;
    std::optional<Certificate> certificate;
    std::string error; // ill-posed claims
    bool holds() const { return certificate && certificate->holds(); }
};

struct Prerequisite {
    std::string what;
    std::optional<Certificate> certificate;
    std::string error;
    bool holds() const { return certificate && certificate->holds(); }
};

enum class CylinderVerdict { noCylinderCertified, noCylinderByAlpha, notCertified };
const char *to_string(CylinderVerdict v);

struct LedgerReport {
    int family = 0;
    Query query;
    StabilityVerdict stability;
    std::optional<InstabilityThreshold> threshold;
    CylinderVerdict verdict = CylinderVerdict::notCertified;
    std::string alphaCitation;
    std::vector<CaseResult> cases;
    std::vector<Prerequisite> prerequisites;
    std::optional<DStar> dstar;
    std::vector<std::string> warnings;
    std::vector<std::string> failures;
    bool reconstructed = false;
};

// Throws std::invalid_argument when a concrete n is off the weight ray.
LedgerReport cylinder_report(const Catalog &cat, int no, Query q = {});

// Every ledger case of the family, including cross-referenced families.
std::vector<ExclusionCase> ledger_cases(const Catalog &cat, int no);

} // namespace dp
