#include "betalag/jack.hpp"

#include <cmath>

namespace betalag {

double jack_at_ones_closed(const Partition& lam, int n_vars, double theta) {
  if (lam.length() > n_vars)
    throw std::invalid_argument("jack_at_ones_closed: l(lambda) > n_vars");
  double logv = 0.0;
  for (int i = 0; i < n_vars; ++i)
    for (int j = i + 1; j < n_vars; ++j)
      logv += logpoch(lam.part(i) - lam.part(j) + theta * (j - i), theta);
  for (int k = 1; k <= n_vars; ++k)
    logv += log_gamma(theta) - log_gamma(theta * k);
  return std::exp(logv);
}

}  // namespace betalag
