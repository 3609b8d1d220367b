#include "delpezzo/mutation.hpp"

#include "delpezzo/cylinder.hpp"

#include <random>
#include <set>

namespace dp {

using json = nlohmann::json;

namespace {

const std::set<std::string> kSkip{"source",   "citation",   "lctSource",   "meetingSource", "alphaSource", "group",
                                  "label",    "site",       "meetingSite", "linePoints",    "kind",        "coords",
                                  "line",     "hx",         "status",      "divisor",       "format"};
const std::set<std::string> kMonomialLists{"monomials", "binomial", "equations"};

bool is_expression(const std::string &s)
{
    try {
        parse_ratfn(s);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

std::string escape(const std::string &key)
{
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

void walk(const json &j, const std::string &ptr, bool monomial, std::vector<NumericLeaf> &out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (kSkip.count(it.key()))
                continue;
            bool mono = monomial || kMonomialLists.count(it.key()) > 0;
            if (monomial && it.key() != "m")
                continue;
            walk(it.value(), ptr + "/" + escape(it.key()), mono, out);
        }
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k)
            walk(j[k], ptr + "/" + std::to_string(k), monomial, out);
    } else if (j.is_number_integer()) {
        out.push_back({ptr, LeafKind::integer});
    } else if (j.is_string()) {
        if (monomial)
            out.push_back({ptr, LeafKind::monomial});
        else if (is_expression(j.get<std::string>()))
            out.push_back({ptr, LeafKind::expression});
    }
}

long long nonzero_delta(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> d(1, 3);
    std::bernoulli_distribution sign(0.5);
    long long v = d(rng);
    return sign(rng) ? v : -v;
}

int monomial_vars(const std::string &pointer)
{
    return pointer.find("/equations/") != std::string::npos ? 5 : 4;
}

std::string mutate_expression(const std::string &text, std::mt19937_64 &rng)
{
    RatFn f = parse_ratfn(text);
    std::uniform_int_distribution<int> pick(0, std::max(0, f.num().degree()));
    std::vector<BigInt> c(static_cast<std::size_t>(std::max(0, f.num().degree())) + 1, BigInt(0));
    c[static_cast<std::size_t>(pick(rng))] = BigInt(nonzero_delta(rng));
    RatFn g(f.num() + IntPoly(std::move(c)), f.den());
    return to_string(g);
}

std::string mutate_monomial(const std::string &text, int nvars, std::mt19937_64 &rng)
{
    Monomial m = parse_monomial(text, nvars);
    std::vector<std::size_t> present;
    for (std::size_t v = 0; v < m.exps.size(); ++v)
        if (!m.exps[v].is_zero())
            present.push_back(v);
    std::size_t v;
    if (present.empty()) {
        v = std::uniform_int_distribution<std::size_t>(0, m.exps.size() - 1)(rng);
    } else {
        v = present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(rng)];
    }
    long long delta = nonzero_delta(rng);
    // keep exponents nonnegative so the text stays a monomial
    if (m.exps[v].is_constant() && m.exps[v].constant_term() + delta < 0)
        delta = -delta;
    m.exps[v] += IntPoly(delta);
    return to_string(m);
}

} // namespace

std::vector<NumericLeaf> numeric_leaves(const json &doc)
{
    std::vector<NumericLeaf> out;
    walk(doc, "", false, out);
    return out;
}

std::size_t MutationSweep::detected() const
{
    std::size_t k = 0;
    for (const auto &o : outcomes)
        k += o.detected ? 1 : 0;
    return k;
}

MutationSweep mutation_sweep(std::string_view catalog_text, std::size_t count, std::uint64_t seed)
{
    MutationSweep sweep;
    sweep.seed = seed;
    const json doc = json::parse(catalog_text.begin(), catalog_text.end());
    const std::vector<NumericLeaf> leaves = numeric_leaves(doc);
    sweep.leaves = leaves.size();
    if (leaves.empty())
        return sweep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);

    for (std::size_t k = 0; k < count; ++k) {
        const NumericLeaf &leaf = leaves[pick(rng)];
        json mutated = doc;
        json &v = mutated[json::json_pointer(leaf.pointer)];
        MutationOutcome out;
        out.pointer = leaf.pointer;
        out.before = v.dump();
        switch (leaf.kind) {
        case LeafKind::integer:
            v = v.get<long long>() + nonzero_delta(rng);
            break;
        case LeafKind::expression:
            v = mutate_expression(v.get<std::string>(), rng);
            break;
        case LeafKind::monomial:
            v = mutate_monomial(v.get<std::string>(), monomial_vars(leaf.pointer), rng);
            break;
        }
        out.after = v.dump();

        Catalog cat;
        try {
            cat = load_catalog(mutated.dump());
        } catch (const CatalogError &e) {
            out.detected = true;
            out.how = "load";
            out.detail = e.what();
            sweep.outcomes.push_back(std::move(out));
            continue;
        }
        std::vector<Diagnostic> ds;
        try {
            ds = validate_catalog(cat);
        } catch (const std::exception &e) {
            ds.push_back({0, "", std::string("validation aborted: ") + e.what(), Severity::error});
        }
        if (!ds.empty()) {
            out.detected = true;
            out.how = "diagnostic";
            out.detail = (ds.front().family ? "family " + std::to_string(ds.front().family) + " " : std::string()) +
                         ds.front().field + ": " + ds.front().message;
            sweep.outcomes.push_back(std::move(out));
            continue;
        }
        for (const auto &f : cat.families) {
            if (!f.support)
                continue;
            try {
                LedgerReport r = cylinder_report(cat, f.no);
                if (r.verdict != CylinderVerdict::noCylinderCertified) {
                    out.detected = true;
                    out.detail = "family " + std::to_string(f.no) + ": " +
                                 (r.failures.empty() ? std::string("not certified") : r.failures.front());
                }
            } catch (const std::exception &e) {
                out.detected = true;
                out.detail = "family " + std::to_string(f.no) + ": " + e.what();
            }
            if (out.detected) {
                out.how = "certification";
                break;
            }
        }
        sweep.outcomes.push_back(std::move(out));
    }
    return sweep;
}

} // namespace dp
