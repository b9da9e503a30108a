#include "betalag/secular.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace betalag {

namespace {
double eval_f(const std::vector<double>& poles, const std::vector<double>& w,
              double y, double* deriv = nullptr) {
  double f = 0.0, d = 0.0;
  for (size_t k = 0; k < poles.size(); ++k) {
    double g = y - poles[k];
    f += w[k] / g;
    d -= w[k] / (g * g);
  }
  if (deriv) *deriv = d;
  return f;
}
}  // namespace

std::vector<double> secular_roots(const std::vector<double>& poles,
                                  const std::vector<double>& weights) {
  const size_t k = poles.size();
  if (k != weights.size()) throw std::invalid_argument("secular: size mismatch");
  for (size_t i = 0; i + 1 < k; ++i)
    if (!(poles[i] < poles[i + 1]))
      throw std::invalid_argument("secular: poles must be strictly increasing");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("secular: weights must be > 0");

  std::vector<double> roots;
  roots.reserve(k - 1);
  for (size_t g = 0; g + 1 < k; ++g) {
    double lo = poles[g], hi = poles[g + 1];
    // f(lo+) = +inf, f(hi-) = -inf, f strictly decreasing on the gap
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval exhausted
      double f = eval_f(poles, weights, mid);
      if (f > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    double y = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
      double d;
      double f = eval_f(poles, weights, y, &d);
      if (d == 0.0 || !std::isfinite(f)) break;
      double step = f / d;
      double y2 = y - step;
      if (y2 > poles[g] && y2 < poles[g + 1]) y = y2;
    }
    roots.push_back(y);
  }
  return roots;
}

}  // namespace betalag
