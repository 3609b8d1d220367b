#pragma once

#include "delpezzo/catalog.hpp"

#include <cstdint>

namespace dp {

enum class LeafKind { integer, expression, monomial };

struct NumericLeaf {
    std::string pointer; // JSON pointer into the catalog document
    LeafKind kind = LeafKind::integer;
};

// Numeric leaves of a catalog document: integers, polynomial or rational
// expressions and monomial exponents. Provenance strings are skipped.
std::vector<NumericLeaf> numeric_leaves(const nlohmann::json &doc);

struct MutationOutcome {
    std::string pointer;
    std::string before, after;
    bool detected = false;
    std::string how; // "load", "diagnostic" or "certification"
    std::string detail;
};

struct MutationSweep {
    std::uint64_t seed = 0;
    std::size_t leaves = 0;
    std::vector<MutationOutcome> outcomes;
    std::size_t detected() const;
};

// Applies count single-leaf mutations to the catalog text, one at a time,
// and records whether loading, validation or ledger certification objects.
MutationSweep mutation_sweep(std::string_view catalog_text, std::size_t count, std::uint64_t seed);

} // namespace dp
