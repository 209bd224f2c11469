#pragma once

#include <functional>
#include <vector>

namespace poslab {

struct QuadRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre rule with n points, computed by Newton iteration on the
/// Legendre recurrence. Rules are cached per n; thread-safe.
const QuadRule& gauss_legendre(int n);

/// Integral of fn over [a, b] with the n-point Gauss-Legendre rule.
double integrate(const std::function<double(double)>& fn, double a, double b, int n);

}  // namespace poslab
