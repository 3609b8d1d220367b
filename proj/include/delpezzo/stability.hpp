#pragma once

#include "delpezzo/family.hpp"

namespace dp {

enum class VerdictSource { criterion, catalogKnown, combined, none };
const char *to_string(VerdictSource s);

struct StabilityVerdict {
    KStatus status = KStatus::unknown;
    VerdictSource source = VerdictSource::none;
    std::optional<Certificate> certificate; // criterion part
    std::vector<std::string> citations;     // catalog part
};

// a0 / I
RatFn alpha_upper_bound(const FamilySpec &f);

struct InstabilityThreshold {
    long long n0 = 1;
    Certificate certificate; // 3 a0 / I < 1 on n >= n0
};

// Least n0 with 3 a0 / I < 1 for every n >= n0; nullopt when there is none.
std::optional<InstabilityThreshold> instability_threshold(const FamilySpec &f);

StabilityVerdict stability_status(const FamilySpec &f, long long n);

// kUnstable when every n on the ray is unstable by the criterion or by a
// catalog entry; the common catalog status when one entry covers the ray.
StabilityVerdict ray_stability(const FamilySpec &f, RayDomain ray);

// Divergences between computed thresholds and the recorded lists.
std::vector<std::string> stability_warnings(const FamilySpec &f);

const KnownEntry *known_entry(const FamilySpec &f, long long n);

} // namespace dp
