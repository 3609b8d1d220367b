#include "delpezzo/intersection.hpp"

#include <algorithm>

namespace dp {

RatFn section_product(const FamilySpec &f, const IntPoly &e, const IntPoly &g)
{
    IntPoly den(1);
    for (const auto &a : f.weights)
        den *= a;
    return RatFn(e * g * f.degree, den);
}

bool line_on_surface(const FamilySpec &f, int i, int j)
{
    if (!f.polynomial)
        return f.decomposition && ((f.decomposition->line[0] == i && f.decomposition->line[1] == j) ||
                                   (f.decomposition->line[0] == j && f.decomposition->line[1] == i));
    for (const auto &m : *f.polynomial) {
        if (!m.coefficientNonzero)
            continue;
        if (m.exps[static_cast<std::size_t>(i)].is_zero() && m.exps[static_cast<std::size_t>(j)].is_zero())
            return false;
    }
    return true;
}

RatFn line_product(const FamilySpec &f, int i, int j, const IntPoly &m)
{
    if (!line_on_surface(f, i, j))
        throw std::invalid_argument(std::string("line {") + coord_name(i) + " = " + coord_name(j) +
                                    " = 0} is not on the surface of family " + std::to_string(f.no));
    IntPoly den(1);
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j)
            den *= f.weights[static_cast<std::size_t>(k)];
    return RatFn(m, den);
}

std::optional<DecompositionData> hx_decomposition(const FamilySpec &f)
{
    if (f.hx == HxShape::irreducible)
        return std::nullopt;
    if (!f.decomposition)
        throw std::invalid_argument("family " + std::to_string(f.no) + " has a reducible H_x but no L.R value");
    const Decomposition &dc = *f.decomposition;
    const IntPoly &a0 = f.weights[0];
    DecompositionData out;
    out.kind = dc.kind;
    out.lDotR = dc.lDotR;
    RatFn lDotH = line_product(f, dc.line[0], dc.line[1], a0);
    out.lDotK = line_product(f, dc.line[0], dc.line[1], f.index);
    out.rDotK = section_product(f, a0, f.index) - out.lDotK;
    out.lSq = lDotH - out.lDotR;
    out.rSq = section_product(f, a0, a0) - lDotH - out.lDotR;
    return out;
}

RatFn adjunction_line_residual(const FamilySpec &f)
{
    if (!f.decomposition)
        throw std::invalid_argument("family " + std::to_string(f.no) + " has no decomposition data");
    const Decomposition &dc = *f.decomposition;
    RatFn lDotH = line_product(f, dc.line[0], dc.line[1], f.weights[0]);
    RatFn lDotK = line_product(f, dc.line[0], dc.line[1], f.index);
    // L^2 = -K.L - 2 + sum (1 - 1/r), L.R = L.H_x - L^2
    RatFn r = lDotH - lDotK + RatFn(2);
    for (const auto &label : dc.linePoints) {
        const SingularStratum *s = f.stratum(label);
        if (!s)
            throw std::invalid_argument("family " + std::to_string(f.no) + ": point " + label +
                                        " of L is not a recorded stratum");
        r = r - RatFn(IntPoly(1)) + RatFn(IntPoly(1), s->order);
    }
    return r;
}

RatFn anticanonical_square(const FamilySpec &f) { return section_product(f, f.index, f.index); }

std::vector<IntPoly> ci_degrees(const CompleteIntersection &ci)
{
    std::vector<IntPoly> out;
    for (const auto &eq : ci.equations)
        out.push_back(eq.empty() ? IntPoly() : weighted_degree(eq.front(), ci.weights));
    return out;
}

RatFn ci_product(const CompleteIntersection &ci, const IntPoly &e, const IntPoly &g)
{
    IntPoly num = e * g, den(1);
    for (const auto &d : ci_degrees(ci))
        num *= d;
    for (const auto &a : ci.weights)
        den *= a;
    return RatFn(num, den);
}

std::vector<IntPoly> display_hints(const FamilySpec &f)
{
    std::vector<IntPoly> h;
    auto add = [&](const IntPoly &p) {
        if (!p.is_constant() && std::find(h.begin(), h.end(), p) == h.end())
            h.push_back(p);
    };
    for (const auto &s : f.strata)
        add(s.order);
    for (const auto &a : f.weights)
        add(a);
    if (f.ci)
        for (const auto &a : f.ci->weights)
            add(a);
    add(f.index);
    add(f.degree);
    return h;
}

} // namespace dp
