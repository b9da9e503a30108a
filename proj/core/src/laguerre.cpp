#include "betalag/laguerre.hpp"

#include <cmath>

namespace betalag {

PfqValue pfq_truncated(const HypergeometricSpec& spec,
                       const std::vector<double>& x,
                       JackContext<double>& ctx) {
  const double theta = ctx.theta();
  const int n = ctx.n_vars();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("pfq: dimension mismatch");
  PfqValue out;
  double fact = 1.0;
  for (int deg = 0; deg <= spec.max_degree; ++deg) {
    if (deg > 1) fact *= deg;
    double shell = 0.0, shell_abs = 0.0;
    for (const Partition& lam : partitions_of(deg, n)) {
      double term = 1.0;
      for (double a : spec.upper) term *= gen_pochhammer(a, lam, theta);
      for (double b : spec.lower) {
        double pb = gen_pochhammer(b, lam, theta);
        if (pb == 0.0)
          throw std::domain_error("pfq: lower-parameter Pochhammer pole");
        term /= pb;
      }
      term *= c_normalization(lam, ctx) * ctx.eval(lam, x) / fact;
      shell += term;
      shell_abs += std::abs(term);
    }
    out.value += shell;
    if (deg == spec.max_degree) out.last_shell = shell_abs;
  }
  return out;
}

double pfq_shift_residual(double theta, double beta, int n, int max_degree) {
  const double b = (beta + n) * theta;
  double worst = 0.0;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const Partition& lam : partitions_of(deg, n)) {
      double lhs = c_eigenvalue(lam, n, theta, beta) *
                   gen_pochhammer(b + theta, lam, theta);
      double rhs = gen_pochhammer(b, lam, theta);
      double scale = std::max(1.0, std::abs(rhs));
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  return worst;
}

bool pfq_shift_exact(const Rational& theta, const Rational& beta, int n,
                     int max_degree) {
  const Rational b = (beta + n) * theta;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const Partition& lam : partitions_of(deg, n)) {
      Rational lhs = c_eigenvalue_rational(lam, n, theta, beta) *
                     gen_pochhammer(Rational(b + theta), lam, theta);
      Rational rhs = gen_pochhammer(b, lam, theta);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace betalag
