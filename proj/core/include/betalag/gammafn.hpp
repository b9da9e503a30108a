#pragma once

#include "betalag/partition.hpp"
#include "betalag/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace betalag {

inline double log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("log_gamma: nonpositive integer pole");
  return std::lgamma(x);
}

// log of the shifted factorial (x)_r = Gamma(x+r)/Gamma(x); requires both
// gamma arguments off the pole set and positive (log-space path).
inline double logpoch(double x, double r) {
  return log_gamma(x + r) - log_gamma(x);
}

// (x)_n for integer n >= 0 as a direct product; valid for any real x.
inline double poch_int(double x, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= (x + k);
  return p;
}

inline Rational poch_int(const Rational& x, int n) {
  Rational p = 1;
  for (int k = 0; k < n; ++k) p *= (x + k);
  return p;
}

// generalized Pochhammer (a)_lambda = prod_i (a - theta(i-1))_{lambda_i}
template <class S>
S gen_pochhammer(const S& a, const Partition& lam, const S& theta) {
  S p = ScalarOps<S>::from_int(1);
  for (int i = 0; i < lam.length(); ++i) {
    S base = a - theta * ScalarOps<S>::from_int(i);
    p *= poch_int(base, lam.part(i));
  }
  return p;
}

}  // namespace betalag
