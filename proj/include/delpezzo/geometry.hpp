#pragma once

#include "delpezzo/family.hpp"

#include <map>

namespace dp {

struct InvalidFamily : std::domain_error {
    using std::domain_error::domain_error;
};

// Truth value of a statement about n: periodic in n with finitely many
// overrides.
struct NPredicate {
    BigInt modulus = 1;
    std::vector<bool> byResidue{false};
    std::map<long long, bool> overrides;

    bool at(long long n) const;
    // Constant value on the ray, if any.
    std::optional<bool> constant_on(RayDomain ray) const;
};

// a(n) divides b(n). a must have degree at most 1.
NPredicate divides(const IntPoly &a, const IntPoly &b, RayDomain ray);

// gcd(|a(n)|, |b(n)|) computed on integers
BigInt int_gcd(const BigInt &a, const BigInt &b);

struct WellFormedFailure {
    std::vector<int> coords;
    BigInt modulus;
    std::vector<BigInt> residues;   // failing classes mod modulus
    std::vector<long long> points;  // isolated failing n
    long long first = 0;
    NPredicate predicate;
};

struct WellFormedness {
    Certificate certificate;
    std::vector<WellFormedFailure> failures;

    bool fails_at(long long n) const;
};

WellFormedness check_well_formed(const Weights &w, const IntPoly &d, RayDomain ray);

IntPoly compute_index(const Weights &w, const IntPoly &d);

std::vector<std::string> check_degree_consistency(const std::vector<Monomial> &monomials,
                                                  const std::vector<IntPoly> &weights,
                                                  const IntPoly &d, const std::string &what = "monomial");
std::vector<std::string> check_degree_consistency(const FamilySpec &f);

enum class Membership { onSurface, offSurface, perN };
const char *to_string(Membership m);

struct VertexMembership {
    Membership kind = Membership::onSurface;
    NPredicate off;
    std::vector<std::string> diagnostics; // disagreements with the polynomial
};

VertexMembership vertex_membership(const FamilySpec &f, int i, std::optional<RayDomain> ray = std::nullopt);

std::vector<SingularStratum> singular_strata(const FamilySpec &f);

// Set comparison on (kind, coordinates, order, label).
std::vector<std::string> compare_strata(const std::vector<SingularStratum> &computed,
                                        const std::vector<SingularStratum> &recorded);

} // namespace dp
