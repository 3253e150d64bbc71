#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dp5/types.hpp"

namespace dp5 {

// Unordered pairs of Cox coordinates that must be coprime:
// (a_i, a_j) for i != j, (a_i, a_jk) for i not in {j,k}, (a_ij, a_ik) for j != k.
const std::vector<std::pair<int, int>>& coprimality_schema();

std::array<Integer, 5> pluecker_residuals(const CoxTuple& a);

struct DependentCoordinates {
    Integer a13, a14, a24;
};

// Solves the torsor equations for (a13, a14, a24). nullopt when a congruence fails.
// Throws std::invalid_argument if a1 a4 = 0 or gcd(a1, a4) != 1.
std::optional<DependentCoordinates> dependent_coordinates(const Integer& a1, const Integer& a2, const Integer& a3,
                                                          const Integer& a4, const Integer& a12, const Integer& a23,
                                                          const Integer& a34);

ProjectivePoint blow_down(const CoxTuple& a);

CoxTuple chart_lift(const ProjectivePoint& y);

bool is_integral(const ProjectivePoint& y);

CoxTuple canonicalize_orbit(const CoxTuple& a);

bool coprimality_check(const CoxTuple& a);

// Sign action lambda = (l0, l1, l2, l3, l4), each +-1.
CoxTuple apply_sign_action(const CoxTuple& a, const std::array<int, 5>& lambda);

}  // namespace dp5
