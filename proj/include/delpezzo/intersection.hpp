#pragma once

#include "delpezzo/family.hpp"

namespace dp {

// O(e) . O(g) on the surface: e g d / (a0 a1 a2 a3)
RatFn section_product(const FamilySpec &f, const IntPoly &e, const IntPoly &g);

// The coordinate line {x_i = x_j = 0} against O(m): m over the two remaining weights.
// Throws std::invalid_argument when the line is not on the surface.
RatFn line_product(const FamilySpec &f, int i, int j, const IntPoly &m);
bool line_on_surface(const FamilySpec &f, int i, int j);

struct DecompositionData {
    std::string kind;
    RatFn lDotK, rDotK, lDotR, lSq, rSq;
};

// nullopt for an irreducible H_x. Throws std::invalid_argument when a
// reducible family has no L.R value.
std::optional<DecompositionData> hx_decomposition(const FamilySpec &f);

// L.R forced by adjunction on L: L^2 + K.L = -2 + sum (1 - 1/r) over the
// singular points of L.
RatFn adjunction_line_residual(const FamilySpec &f);

RatFn anticanonical_square(const FamilySpec &f);

// O(e) . O(g) on a complete intersection of two equations.
RatFn ci_product(const CompleteIntersection &ci, const IntPoly &e, const IntPoly &g);
std::vector<IntPoly> ci_degrees(const CompleteIntersection &ci);

// Polynomials whose factors reports keep visible.
std::vector<IntPoly> display_hints(const FamilySpec &f);

} // namespace dp
