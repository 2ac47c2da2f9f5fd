#pragma once

#include <vector>

#include "graphdep/errors.hpp"

namespace graphdep {

/// Per-coordinate bounded-difference coefficients, one per vertex.
using LipschitzVector = std::vector<double>;

LipschitzVector uniform_lipschitz(int n, double c);

/// Throws unless every entry is >= 0 and the length matches n.
void check_lipschitz(const LipschitzVector& c, int n);

double sum_of_squares(const LipschitzVector& c);

}  // namespace graphdep
