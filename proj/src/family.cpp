#include "delpezzo/family.hpp"

#include <algorithm>
#include <cctype>

namespace dp {

char coord_name(int i)
{
    static const char names[] = "xyztw";
    return i >= 0 && i < 5 ? names[i] : '?';
}

int coord_index(char c)
{
    switch (c) {
    case 'x':
        return 0;
    case 'y':
        return 1;
    case 'z':
        return 2;
    case 't':
        return 3;
    case 'w':
        return 4;
    default:
        return -1;
    }
}

Monomial parse_monomial(std::string_view text, int nvars)
{
    Monomial m;
    m.exps.assign(static_cast<std::size_t>(nvars), IntPoly());
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    if (i == text.size())
        throw ParseError("empty monomial", 0);
    if (text.substr(i) == "1")
        return m;
    while (skip(), i < text.size()) {
        int v = coord_index(text[i]);
        if (v < 0 || v >= nvars)
            throw ParseError(std::string("unknown variable '") + text[i] + "'", i);
        ++i;
        skip();
        IntPoly e(1);
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            if (i < text.size() && text[i] == '(') {
                int depth = 0;
                std::size_t start = i;
                for (; i < text.size(); ++i) {
                    if (text[i] == '(')
                        ++depth;
                    else if (text[i] == ')' && --depth == 0)
                        break;
                }
                if (i == text.size())
                    throw ParseError("unbalanced exponent", start);
                e = parse_poly(text.substr(start, i - start + 1));
                ++i;
            } else {
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
                if (start == i)
                    throw ParseError("expected exponent", start);
                e = parse_poly(text.substr(start, i - start));
            }
        }
        m.exps[static_cast<std::size_t>(v)] += e;
    }
    return m;
}

std::string to_string(const Monomial &m)
{
    std::string s;
    for (std::size_t v = 0; v < m.exps.size(); ++v) {
        const IntPoly &e = m.exps[v];
        if (e.is_zero())
            continue;
        s += coord_name(static_cast<int>(v));
        if (e == IntPoly(1))
            continue;
        std::string t = to_string(e);
        if (e.is_constant() && e.constant_term() > 0)
            s += "^" + t;
        else
            s += "^(" + t + ")";
    }
    return s.empty() ? "1" : s;
}

IntPoly weighted_degree(const Monomial &m, const std::vector<IntPoly> &weights)
{
    IntPoly d;
    for (std::size_t v = 0; v < m.exps.size() && v < weights.size(); ++v)
        d += m.exps[v] * weights[v];
    return d;
}

std::string vertex_label(int i) { return std::string("p_") + coord_name(i); }

std::string order_label(const IntPoly &order)
{
    std::string s = to_string(order);
    return s.size() == 1 ? "p_" + s : "p_{" + s + "}";
}

const char *to_string(KStatus s)
{
    switch (s) {
    case KStatus::kStable:
        return "kStable";
    case KStatus::kSemistableOnly:
        return "kSemistableOnly";
    case KStatus::kUnstable:
        return "kUnstable";
    case KStatus::unknown:
        return "unknown";
    }
    return "unknown";
}

std::optional<KStatus> parse_kstatus(std::string_view s)
{
    for (KStatus k : {KStatus::kStable, KStatus::kSemistableOnly, KStatus::kUnstable, KStatus::unknown})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

const SingularStratum *FamilySpec::stratum(std::string_view label) const
{
    auto it = std::find_if(strata.begin(), strata.end(), [&](const SingularStratum &s) { return s.label == label; });
    return it == strata.end() ? nullptr : &*it;
}

RayDomain table_ray(const FamilySpec &f) { return RayDomain{std::max<long long>(f.ray.n0, 3)}; }

const FamilySpec *Catalog::find(int no) const
{
    auto it = std::find_if(families.begin(), families.end(), [&](const FamilySpec &f) { return f.no == no; });
    return it == families.end() ? nullptr : &*it;
}

const FamilySpec &Catalog::at(int no) const
{
    if (const FamilySpec *f = find(no))
        return *f;
    throw std::out_of_range("no family " + std::to_string(no) + " in the catalog");
}

} // namespace dp
