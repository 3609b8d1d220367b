#pragma once

#include "delpezzo/catalog.hpp"
#include "delpezzo/cylinder.hpp"

namespace dp {

nlohmann::ordered_json to_json(const ExclusionCase &c);
nlohmann::ordered_json to_json(const LedgerReport &r);
std::string to_markdown(const LedgerReport &r, const Catalog &cat);

// Table 2 and Table 4 style summaries over the whole catalog.
nlohmann::ordered_json stability_table_json(const Catalog &cat);
std::string stability_table_markdown(const Catalog &cat);
nlohmann::ordered_json dstar_table_json(const Catalog &cat);
std::string dstar_table_markdown(const Catalog &cat);

struct CaseOracle {
    ExclusionCase c;
    long long from = 0, to = 0; // the part of the range on the case's ray
    OracleResult result;
};

// Integer sweep of lhs <= threshold for every ledger case of the family
// over [a, b], clipped to each case's ray.
std::vector<CaseOracle> oracle_sweep(const Catalog &cat, int no, long long a, long long b);
nlohmann::ordered_json to_json(const CaseOracle &o);

} // namespace dp
