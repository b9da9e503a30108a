#pragma once

#include <functional>
#include <vector>

namespace betalag {

// Gauss-Jacobi rule on [-1, 1] against the weight (1-u)^p (1+u)^q, p, q > -1.
// Integrates polynomials of degree <= 2n - 1 exactly.
struct JacobiRule {
  double p = 0.0;
  double q = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch on the Jacobi three-term recurrence (cached by (p, q, n)).
const JacobiRule& jacobi_rule(double p, double q, int n);

// integral over [a, b] of (y - a)^{exp_a} (b - y)^{exp_b} f(y) dy with f smooth
double integrate_jacobi(double a, double b, double exp_a, double exp_b, int n,
                        const std::function<double(double)>& f);

}  // namespace betalag
