#include "delpezzo/cli.hpp"

#include "delpezzo/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace dp {

using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> select_families(const std::string &sel, const Catalog &cat)
{
    std::vector<int> out;
    if (sel == "all") {
        for (const auto &f : cat.families)
            out.push_back(f.no);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<int> seen;
    std::stringstream ss(sel);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(part, &used);
        } catch (const std::exception &) {
            throw UsageError("bad family selector '" + sel + "'");
        }
        if (used != part.size())
            throw UsageError("bad family selector '" + sel + "'");
        if (!cat.find(k))
            throw UsageError("unknown family " + std::to_string(k));
        if (seen.insert(k).second)
            out.push_back(k);
    }
    if (out.empty())
        throw UsageError("empty family selector");
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<long long, long long> parse_range(const std::string &s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("oracle range must look like a..b");
    try {
        std::size_t u1 = 0, u2 = 0;
        std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        long long lo = std::stoll(a, &u1), hi = std::stoll(b, &u2);
        if (u1 != a.size() || u2 != b.size() || lo > hi)
            throw UsageError("bad oracle range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw UsageError("bad oracle range '" + s + "'");
    }
}

Catalog open_catalog(const RunConfig &cfg, std::string &origin)
{
    std::string path = cfg.catalogPath;
    if (path.empty())
        if (const char *env = std::getenv("DELPEZZO_CATALOG"))
            path = env;
    if (path.empty()) {
        origin = "embedded reference catalog";
        return reference_catalog();
    }
    origin = path;
    return load_catalog_file(path);
}

Query make_query(const RunConfig &cfg)
{
    Query q;
    if (cfg.n)
        q.n = *cfg.n;
    if (cfg.ray)
        q.ray = RayDomain{*cfg.ray};
    return q;
}

int cmd_validate(const Catalog &cat, const RunConfig &cfg, std::ostream &out)
{
    auto ds = validate_catalog(cat);
    if (cfg.format == "md") {
        out << "# Catalog validation\n\n" << cat.families.size() << " families, " << ds.size() << " diagnostics\n";
        for (const auto &d : ds)
            out << "- " << (d.family ? "No. " + std::to_string(d.family) + " " : std::string()) << d.field << " ("
                << to_string(d.severity) << "): " << d.message << "\n";
    } else {
        ojson j;
        j["families"] = cat.families.size();
        j["diagnostics"] = diagnostics_json(ds);
        out << j.dump(2) << "\n";
    }
    return ds.empty() ? kOk : kVerdictFailure;
}

int cmd_family(const Catalog &cat, const RunConfig &cfg, const std::vector<int> &sel, bool tables,
               std::ostream &out)
{
    Query q = make_query(cfg);
    for (int k : sel) {
        const FamilySpec &f = cat.at(k);
        if (q.n && *q.n < f.ray.n0)
            throw UsageError("family " + std::to_string(k) + ": n = " + std::to_string(*q.n) +
                             " is off the weight ray n >= " + std::to_string(f.ray.n0));
        if (q.ray && q.ray->n0 < f.ray.n0)
            throw UsageError("family " + std::to_string(k) + ": ray n >= " + std::to_string(q.ray->n0) +
                             " leaves the weight ray n >= " + std::to_string(f.ray.n0));
    }
    std::vector<LedgerReport> reps;
    for (int k : sel)
        reps.push_back(cylinder_report(cat, k, q));
    bool ok = true;
    for (const auto &r : reps)
        ok = ok && r.verdict != CylinderVerdict::notCertified;

    if (cfg.format == "md") {
        if (tables) {
            out << "# Report\n\n## K-stability\n\n" << stability_table_markdown(cat) << "\n## D*\n\n"
                << dstar_table_markdown(cat) << "\n## Ledgers\n\n";
        }
        for (const auto &r : reps)
            out << to_markdown(r, cat);
    } else {
        ojson j;
        if (tables) {
            j["stability"] = stability_table_json(cat);
            j["dstar"] = dstar_table_json(cat);
        }
        ojson arr = ojson::array();
        for (const auto &r : reps)
            arr.push_back(to_json(r));
        j["reports"] = arr;
        out << j.dump(2) << "\n";
    }
    return ok ? kOk : kVerdictFailure;
}

int cmd_oracle(const Catalog &cat, const RunConfig &cfg, const std::vector<int> &sel, std::ostream &out)
{
    bool clean = true;
    ojson arr = ojson::array();
    std::ostringstream md;
    md << "# Oracle sweep over [" << cfg.oracleFrom << ", " << cfg.oracleTo << "]\n\n";
    md << "| No. | case | claim | range | counterexamples |\n|---|---|---|---|---|\n";
    for (int k : sel) {
        if (!cat.at(k).support)
            continue;
        for (const auto &o : oracle_sweep(cat, k, cfg.oracleFrom, cfg.oracleTo)) {
            bool c = o.result.clean() && o.result.poles.empty();
            clean = clean && c;
            ojson j = to_json(o);
            j["family"] = k;
            arr.push_back(j);
            md << "| " << k << " | " << o.c.id << " | " << claim_text(o.c.lhs, Relation::le, o.c.threshold, o.c.hints)
               << " | [" << o.from << ", " << o.to << "] | ";
            if (c)
                md << "none";
            for (std::size_t i = 0; i < o.result.counterexamples.size() && i < 10; ++i)
                md << (i ? ", " : "") << o.result.counterexamples[i];
            if (!o.result.poles.empty())
                md << " poles at " << o.result.poles.front();
            md << " |\n";
        }
    }
    if (cfg.format == "md") {
        out << md.str();
    } else {
        ojson j;
        j["range"] = {cfg.oracleFrom, cfg.oracleTo};
        j["cases"] = arr;
        j["clean"] = clean;
        out << j.dump(2) << "\n";
    }
    return clean ? kOk : kVerdictFailure;
}

} // namespace

std::optional<int> parse_args(int argc, const char *const *argv, RunConfig &cfg, std::ostream &out,
                              std::ostream &err)
{
    CLI::App app{"Certified ledgers for del Pezzo hypersurfaces in weighted projective space", "delpezzo"};
    app.require_subcommand(1);
    std::string range;

    auto common = [&](CLI::App *sub, bool selection) {
        sub->add_option("--catalog", cfg.catalogPath, "catalog file (default: $DELPEZZO_CATALOG, then embedded)");
        sub->add_option("--format", cfg.format, "json or md")->check(CLI::IsMember({"json", "md"}));
        sub->add_option("--out", cfg.out, "output path or stdout");
        if (selection)
            sub->add_option("--family", cfg.families, "k, k,k or all");
    };
    CLI::App *validate = app.add_subcommand("validate", "load and validate the catalog");
    common(validate, false);
    CLI::App *family = app.add_subcommand("family", "stability and cylinder ledger for selected families");
    common(family, true);
    family->add_option("k", cfg.families, "family selector, same as --family");
    auto *nopt = family->add_option("--n", cfg.n, "a single value of n");
    auto *ropt = family->add_option("--ray", cfg.ray, "certify on n >= RAY");
    nopt->excludes(ropt);
    CLI::App *report = app.add_subcommand("report", "tables and ledgers for every family");
    common(report, true);
    CLI::App *oracle = app.add_subcommand("oracle", "integer sweep of every ledger inequality");
    common(oracle, true);
    oracle->add_option("--oracle-range", range, "a..b (default 3..1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (validate->parsed())
        cfg.command = "validate";
    else if (family->parsed())
        cfg.command = "family";
    else if (report->parsed())
        cfg.command = "report";
    else
        cfg.command = "oracle";
    if (!range.empty()) {
        try {
            auto [a, b] = parse_range(range);
            cfg.oracleFrom = a;
            cfg.oracleTo = b;
        } catch (const UsageError &e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    return std::nullopt;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    Catalog cat;
    std::string origin;
    try {
        cat = open_catalog(cfg, origin);
    } catch (const CatalogError &e) {
        err << "catalog error: " << e.what() << "\n";
        return kCatalogError;
    }

    std::ostringstream buf;
    int code = kOk;
    try {
        std::vector<int> sel = select_families(cfg.families, cat);
        if (cfg.command == "validate")
            code = cmd_validate(cat, cfg, buf);
        else if (cfg.command == "family")
            code = cmd_family(cat, cfg, sel, false, buf);
        else if (cfg.command == "report")
            code = cmd_family(cat, cfg, sel, true, buf);
        else if (cfg.command == "oracle")
            code = cmd_oracle(cat, cfg, sel, buf);
        else
            throw UsageError("unknown command " + cfg.command);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range &e) {
        err << "catalog error: " << e.what() << "\n";
        return kCatalogError;
    } catch (const std::invalid_argument &e) {
        err << "catalog error: " << e.what() << "\n";
        return kCatalogError;
    }

    if (cfg.out.empty() || cfg.out == "stdout") {
        out << buf.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.out << "\n";
            return kUsage;
        }
        f << buf.str();
    }
    return code;
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    if (auto code = parse_args(argc, argv, cfg, out, err))
        return *code;
    return run(cfg, out, err);
}

} // namespace dp
