#pragma once

#include "delpezzo/certify.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dp {

// Coordinates x, y, z, t of the ambient space, then w for the
// complete-intersection models.
char coord_name(int i);
int coord_index(char c); // -1 when c is not a coordinate name

using Weights = std::array<IntPoly, 4>;

struct Monomial {
    std::vector<IntPoly> exps; // one exponent per variable
    bool coefficientNonzero = true;
};

// "x^(12n-9)", "y^2t", "xz^3", "wx"
Monomial parse_monomial(std::string_view text, int nvars);
std::string to_string(const Monomial &m);
IntPoly weighted_degree(const Monomial &m, const std::vector<IntPoly> &weights);

enum class StratumKind { vertex, edge };

struct SingularStratum {
    StratumKind kind = StratumKind::vertex;
    int i = 0;
    int j = 0; // second coordinate of the edge, unused for vertices
    std::string label;
    IntPoly order;
    std::optional<IntPoly> count;
};

std::string vertex_label(int i);
std::string order_label(const IntPoly &order);

struct WellFormedException {
    std::vector<int> coords; // a pair or a triple
    BigInt modulus;
    std::vector<BigInt> residues; // classes of n where the condition fails
};

// One "site" of a displayed inequality: smooth points or a named stratum.
struct SiteBound {
    std::string site;
    std::optional<int> mult;          // absent: both 1/r and 2/r are checked
    std::optional<RatFn> threshold;   // as displayed
};

// A displayed "X . D = lhs > {thresholds}" block.
struct SectionBlock {
    std::string divisor;
    std::optional<RatFn> displayedLhs;
    std::vector<SiteBound> sites;
    bool reconstructed = false;
    std::string source;
};

struct MovingSystem {
    std::vector<Monomial> monomials;
    IntPoly degree;
    SectionBlock block;
};

struct HySection {
    std::vector<Monomial> binomial;
    std::array<int, 2> localExponents{2, 3};
    Rational lct;
    std::string lctSource;
    SectionBlock block;
};

enum class HxShape { irreducible, twoComponents };

struct Decomposition {
    std::string kind;                     // "L+R" or "L1+L2"
    std::array<int, 2> line{0, 2};        // coordinates vanishing on L
    RatFn lDotR;
    std::vector<std::string> linePoints;  // singular points of L
    std::optional<RatFn> lDotK, rDotK, lSq, rSq;
    bool reconstructed = false;
    std::string source;
};

struct ReducibleLedger {
    std::string meetingSite;
    std::optional<RatFn> lineLhs, residualLhs; // displayed L.D and R.D
    bool meetingReconstructed = false;
    std::string meetingSource;
    SectionBlock adjusted;                     // R.(D - R), at lambda = 1
    std::optional<RatFn> adjustedSlope;        // coefficient of lambda
};

struct CompleteIntersection {
    std::vector<IntPoly> weights; // five
    IntPoly index;
    std::vector<std::vector<Monomial>> equations;
    std::optional<RatFn> displayedLhs;
    std::optional<int> mult;
    std::optional<RatFn> threshold;
    bool reconstructed = false;
    std::string source;
};

struct DStarFixture {
    std::string group;
    RatFn dCoeff, hxCoeff;
    long long validFrom = 1;
    std::string source;
};

enum class KStatus { kStable, kSemistableOnly, kUnstable, unknown };
const char *to_string(KStatus s);
std::optional<KStatus> parse_kstatus(std::string_view s);

struct KnownEntry {
    long long from = 1;
    std::optional<long long> to; // open-ended when absent
    KStatus status = KStatus::unknown;
    std::string citation;
};

struct StabilityData {
    std::optional<long long> statedThreshold;
    std::optional<long long> unstableFrom;
    std::vector<KnownEntry> known;
    std::string source;
};

struct FamilySpec {
    int no = 0;
    Weights weights;
    IntPoly degree;
    IntPoly index; // as recorded
    RayDomain ray;
    std::vector<WellFormedException> wellFormedExceptions;
    std::optional<std::vector<Monomial>> polynomial;
    std::string polynomialSource;
    bool polynomialReconstructed = false;
    std::vector<SingularStratum> strata;
    HxShape hx = HxShape::irreducible;
    std::optional<MovingSystem> moving;
    std::optional<HySection> hy;
    std::optional<SectionBlock> support;
    std::optional<Decomposition> decomposition;
    std::optional<ReducibleLedger> reducible;
    std::optional<CompleteIntersection> ci;
    std::optional<int> crossRef;
    std::optional<DStarFixture> dstar;
    StabilityData stability;
    std::optional<Rational> knownAlpha;
    std::string alphaSource;
    std::string source;

    std::vector<IntPoly> weight_list() const { return {weights.begin(), weights.end()}; }
    const SingularStratum *stratum(std::string_view label) const;
};

// The ray on which the theorem-level tables are stated: n >= 3 or later.
RayDomain table_ray(const FamilySpec &f);

struct Catalog {
    int version = 1;
    std::vector<FamilySpec> families;

    const FamilySpec *find(int no) const;
    const FamilySpec &at(int no) const; // throws std::out_of_range
};

} // namespace dp
