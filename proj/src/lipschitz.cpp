#include "graphdep/lipschitz.hpp"

#include <string>

namespace graphdep {

LipschitzVector uniform_lipschitz(int n, double c) {
  if (n < 0) throw ValidationError("lipschitz vector length must be nonnegative");
  if (c < 0) throw ValidationError("lipschitz coefficient must be nonnegative");
  return LipschitzVector(static_cast<size_t>(n), c);
}

void check_lipschitz(const LipschitzVector& c, int n) {
  if (static_cast<int>(c.size()) != n) {
    throw ValidationError("lipschitz vector length " + std::to_string(c.size()) +
                          " does not match vertex count " + std::to_string(n));
  }
  for (double value : c) {
    if (value < 0.0) throw ValidationError("lipschitz coefficients must be nonnegative");
  }
}

double sum_of_squares(const LipschitzVector& c) {
  double total = 0.0;
  for (double value : c) total += value * value;
  return total;
}

}  // namespace graphdep
