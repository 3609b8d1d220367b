#pragma once

#include "delpezzo/exactmath.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dp {

// The integers n >= n0.
struct RayDomain {
    long long n0 = 1;
    friend bool operator==(const RayDomain &, const RayDomain &) = default;
};

enum class Relation { lt, le, eq, ge, gt };
enum class Verdict { holds, fails };
enum class Method {
    shift_nonneg_coefficients,
    root_bound_pointwise,
    identity,
    counterexample,
    point_evaluation,
    residue_case_split,
};

const char *to_string(Relation r);
const char *to_string(Verdict v);
const char *to_string(Method m);
bool compare(const Rational &a, Relation r, const Rational &b);

struct Claim {
    RatFn lhs;
    Relation relation = Relation::le;
    RatFn rhs;
    RayDomain ray;
    std::optional<long long> at; // set for single-point claims
};

struct Certificate {
    std::string claim_text;
    std::optional<Claim> claim;
    Verdict verdict = Verdict::holds;
    Method method = Method::identity;
    std::optional<long long> witness;
    std::vector<IntPoly> audit;
    std::vector<std::string> notes;

    bool holds() const { return verdict == Verdict::holds; }
};

// A denominator vanishes at an integer of the quantified domain.
struct IllPosedClaim : std::domain_error {
    IllPosedClaim(long long root, const std::string &what);
    long long root;
};

// Decides p(n) >= 0 (p(n) > 0 when strict) for every integer n >= ray.n0.
Certificate certify_poly_nonneg(const IntPoly &p, RayDomain ray, bool strict);

// Smallest integer n >= n0 with p(n) < 0 (p(n) <= 0 when strict).
std::optional<long long> first_violation(const IntPoly &p, long long n0, bool strict);

// Integer roots of p in [lo, hi], ascending. p must be nonzero.
std::vector<long long> integer_roots(const IntPoly &p, long long lo, long long hi);

// 1 + ceil(max |a_k / a_lead|): every real root lies strictly inside (-B, B).
BigInt cauchy_bound(const IntPoly &p);

Certificate certify_cmp(const RatFn &lhs, const RatFn &rhs, Relation rel, RayDomain ray);
Certificate certify_at(const RatFn &lhs, const RatFn &rhs, Relation rel, long long n);

// Least n0 >= 1 for which the relation holds on every n >= n0.
std::optional<long long> minimal_threshold(const RatFn &lhs, const RatFn &rhs, Relation rel);

struct OracleResult {
    std::vector<long long> counterexamples;
    std::vector<long long> poles;
    bool clean() const { return counterexamples.empty(); }
};
OracleResult brute_oracle(const RatFn &lhs, const RatFn &rhs, Relation rel, long long a, long long b);

std::string claim_text(const RatFn &lhs, Relation rel, const RatFn &rhs, const std::vector<IntPoly> &hints = {});

nlohmann::ordered_json to_json(const Certificate &c);

} // namespace dp
