#pragma once

#include "delpezzo/family.hpp"

#include <istream>

namespace dp {

// Unreadable or schema-violating catalog input. where names the JSON path
// or the line and column of a syntax error.
struct CatalogError : std::runtime_error {
    CatalogError(const std::string &where, const std::string &what);
    std::string where;
};

Catalog load_catalog(std::string_view text);
Catalog load_catalog(std::istream &in);
Catalog load_catalog_file(const std::string &path);

// The reference catalog compiled into the library.
std::string_view embedded_catalog_text();
const Catalog &reference_catalog();

enum class Severity { error, warning };
const char *to_string(Severity s);

struct Diagnostic {
    int family = 0; // 0 for catalog-level findings
    std::string field;
    std::string message;
    Severity severity = Severity::error;
};

std::vector<Diagnostic> validate_family(const Catalog &c, const FamilySpec &f);
std::vector<Diagnostic> validate_catalog(const Catalog &c);

nlohmann::ordered_json diagnostics_json(const std::vector<Diagnostic> &ds);

nlohmann::ordered_json to_json(const FamilySpec &f);
nlohmann::ordered_json to_json(const Catalog &c);
std::string serialize_catalog(const Catalog &c);

// Families whose H_x splits into two components.
bool reducible_hx(int no);

} // namespace dp
