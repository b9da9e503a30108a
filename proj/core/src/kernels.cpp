#include "betalag/kernels.hpp"

#include "betalag/gammafn.hpp"
#include "betalag/quadrature.hpp"
#include "betalag/secular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace betalag {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_weakly_increasing(const std::vector<double>& x) {
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] <= x[i + 1]))
      throw std::invalid_argument("kernel input is not weakly increasing");
}

void require_density_ok(const std::vector<double>& x, double theta,
                        bool need_positive_x1) {
  if (!(theta >= 0.5))
    throw std::invalid_argument("density requires theta >= 1/2");
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] < x[i + 1]))
      throw std::invalid_argument("density requires strictly interior x");
  if (need_positive_x1 && !(x.front() > 0.0))
    throw std::invalid_argument("density requires x_1 > 0");
}

// interlaced roots of sum w_i / (y - p_i), with tied poles coalesced: a pole of
// multiplicity m contributes m-1 roots pinned at the pole
std::vector<double> interlaced_roots(const std::vector<double>& poles,
                                     const std::vector<double>& weights) {
  std::vector<double> dpoles, dweights, pinned;
  for (size_t i = 0; i < poles.size();) {
    size_t j = i;
    double w = 0.0;
    while (j < poles.size() && poles[j] == poles[i]) w += weights[j], ++j;
    dpoles.push_back(poles[i]);
    dweights.push_back(std::max(w, std::numeric_limits<double>::min()));
    for (size_t k = i; k + 1 < j; ++k) pinned.push_back(poles[i]);
    i = j;
  }
  std::vector<double> roots = secular_roots(dpoles, dweights);
  roots.insert(roots.end(), pinned.begin(), pinned.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}
}  // namespace

void KernelParams::validate() const {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  if (!(alpha > -1.0)) throw std::invalid_argument("alpha must be > -1");
  if (n < 1) throw std::invalid_argument("N must be >= 1");
}

std::vector<double> sample_dixon_anderson(const std::vector<double>& x,
                                          double theta, RngStream& rng) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  require_weakly_increasing(x);
  if (x.size() < 2) throw std::invalid_argument("need x in W^{N+1}, N >= 1");
  std::vector<double> shapes(x.size(), theta);
  return interlaced_roots(x, rng.dirichlet(shapes));
}

std::vector<double> sample_lambda(const std::vector<double>& x,
                                  const KernelParams& p, RngStream& rng) {
  p.validate();
  require_weakly_increasing(x);
  if (static_cast<int>(x.size()) != p.n)
    throw std::invalid_argument("sample_lambda: |x| != N");
  if (!x.empty() && x.front() < 0.0)
    throw std::invalid_argument("sample_lambda: x must be nonnegative");
  std::vector<double> poles(x.size() + 1);
  poles[0] = 0.0;
  std::copy(x.begin(), x.end(), poles.begin() + 1);
  std::vector<double> shapes(poles.size(), p.theta);
  shapes[0] = (p.alpha + 1.0) * p.theta;
  return interlaced_roots(poles, rng.dirichlet(shapes));
}

std::vector<double> sample_composed(const std::vector<double>& x,
                                    const KernelParams& p, RngStream& rng) {
  std::vector<double> mid = sample_dixon_anderson(x, p.theta, rng);
  return sample_lambda(mid, p, rng);
}

double log_density_dixon_anderson(const std::vector<double>& x,
                                  const std::vector<double>& y, double theta) {
  require_density_ok(x, theta, false);
  const size_t n = y.size();
  if (x.size() != n + 1)
    throw std::invalid_argument("dixon-anderson density: |x| != |y| + 1");
  for (size_t j = 0; j < n; ++j)
    if (!(x[j] <= y[j] && y[j] <= x[j + 1])) return kNegInf;
  double logd = log_gamma((n + 1) * theta) - (n + 1) * log_gamma(theta);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) logd += std::log(y[j] - y[i]);
  for (size_t i = 0; i < n + 1; ++i)
    for (size_t j = i + 1; j < n + 1; ++j)
      logd -= (2.0 * theta - 1.0) * std::log(x[j] - x[i]);
  for (size_t i = 0; i < n + 1; ++i)
    for (size_t j = 0; j < n; ++j)
      logd += (theta - 1.0) * std::log(std::abs(x[i] - y[j]));
  return logd;
}

double density_dixon_anderson(const std::vector<double>& x,
                              const std::vector<double>& y, double theta) {
  return std::exp(log_density_dixon_anderson(x, y, theta));
}

double log_density_lambda(const std::vector<double>& x,
                          const std::vector<double>& y,
                          const KernelParams& p) {
  p.validate();
  require_density_ok(x, p.theta, true);
  const size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("lambda density: |y| != |x|");
  double prev = 0.0;
  for (size_t j = 0; j < n; ++j) {
    if (!(prev <= y[j] && y[j] <= x[j])) return kNegInf;
    prev = x[j];
  }
  const double theta = p.theta;
  double logd = log_gamma((n + p.alpha + 1.0) * theta) - n * log_gamma(theta) -
                log_gamma((p.alpha + 1.0) * theta);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      logd += std::log(y[j] - y[i]);
      logd -= (2.0 * theta - 1.0) * std::log(x[j] - x[i]);
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      logd += (theta - 1.0) * std::log(std::abs(x[i] - y[j]));
  for (size_t i = 0; i < n; ++i) {
    logd += (theta * (p.alpha + 1.0) - 1.0) * std::log(y[i]);
    logd -= (theta * (p.alpha + 2.0) - 1.0) * std::log(x[i]);
  }
  return logd;
}

double density_lambda(const std::vector<double>& x,
                      const std::vector<double>& y, const KernelParams& p) {
  return std::exp(log_density_lambda(x, y, p));
}

double c_eigenvalue(const Partition& lam, int n, double theta, double alpha) {
  if (lam.length() > n)
    throw std::invalid_argument("c_eigenvalue: l(lambda) > N");
  double c = 1.0;
  for (int i = 1; i <= n; ++i) {
    int li = lam.part(i - 1);
    if (li == 0) continue;
    double numer = poch_int((n + alpha + 1 - i) * theta, li);
    double denom = poch_int((n + alpha + 2 - i) * theta, li);
    if (denom == 0.0)
      throw std::domain_error("c_eigenvalue: Pochhammer pole in denominator");
    c *= numer / denom;
  }
  return c;
}

Rational c_eigenvalue_rational(const Partition& lam, int n,
                               const Rational& theta, const Rational& alpha) {
  if (lam.length() > n)
    throw std::invalid_argument("c_eigenvalue: l(lambda) > N");
  Rational c = 1;
  for (int i = 1; i <= n; ++i) {
    int li = lam.part(i - 1);
    if (li == 0) continue;
    Rational numer = poch_int(Rational(n - i + 1) * theta + alpha * theta,
                              li);
    Rational denom = poch_int(Rational(n - i + 2) * theta + alpha * theta,
                              li);
    if (denom == 0)
      throw std::domain_error("c_eigenvalue: Pochhammer pole in denominator");
    c *= numer / denom;
  }
  return c;
}

namespace {

// normalized expectation  E[g(y)]  under the kernel density, deterministic
// tensor Gauss-Jacobi over the interlacing set; N in {1, 2}
double quad_expectation(const std::vector<double>& x, const KernelParams& p,
                        KernelKind which, int nodes,
                        const std::function<double(const std::vector<double>&)>& g) {
  const double theta = p.theta;
  if (which == KernelKind::DixonAnderson) {
    require_density_ok(x, theta, false);
    const int n = static_cast<int>(x.size()) - 1;
    double logpref = log_gamma((n + 1) * theta) - (n + 1) * log_gamma(theta);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        logpref -= (2.0 * theta - 1.0) * std::log(x[j] - x[i]);
    const double pref = std::exp(logpref);
    if (n == 1) {
      return pref * integrate_jacobi(x[0], x[1], theta - 1.0, theta - 1.0,
                                     nodes, [&](double y) {
                                       return g({y});
                                     });
    }
    if (n == 2) {
      return pref *
             integrate_jacobi(
                 x[0], x[1], theta - 1.0, theta - 1.0, nodes, [&](double y1) {
                   double smooth1 = std::pow(x[2] - y1, theta - 1.0);
                   double inner = integrate_jacobi(
                       x[1], x[2], theta - 1.0, theta - 1.0, nodes,
                       [&](double y2) {
                         return (y2 - y1) * std::pow(y2 - x[0], theta - 1.0) *
                                g({y1, y2});
                       });
                   return smooth1 * inner;
                 });
    }
    throw std::invalid_argument("quadrature supports N in {1, 2}");
  }

  // Lambda kernel
  require_density_ok(x, theta, true);
  const int n = static_cast<int>(x.size());
  const double s = theta * (p.alpha + 1.0) - 1.0;
  double logpref = log_gamma((n + p.alpha + 1.0) * theta) -
                   n * log_gamma(theta) - log_gamma((p.alpha + 1.0) * theta);
  for (int i = 0; i < n; ++i)
    logpref -= (theta * (p.alpha + 2.0) - 1.0) * std::log(x[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      logpref -= (2.0 * theta - 1.0) * std::log(x[j] - x[i]);
  const double pref = std::exp(logpref);
  if (n == 1) {
    return pref * integrate_jacobi(0.0, x[0], s, theta - 1.0, nodes,
                                   [&](double y) { return g({y}); });
  }
  if (n == 2) {
    return pref *
           integrate_jacobi(0.0, x[0], s, theta - 1.0, nodes, [&](double y1) {
             double smooth1 = std::pow(x[1] - y1, theta - 1.0);
             double inner = integrate_jacobi(
                 x[0], x[1], theta - 1.0, theta - 1.0, nodes, [&](double y2) {
                   return (y2 - y1) * std::pow(y2, s) * g({y1, y2});
                 });
             return smooth1 * inner;
           });
  }
  throw std::invalid_argument("quadrature supports N in {1, 2}");
}

}  // namespace

EigenCheckResult eigen_check_quadrature(const Partition& lam,
                                        const std::vector<double>& x,
                                        const KernelParams& p, KernelKind which,
                                        int nodes) {
  const int n_inner =
      which == KernelKind::DixonAnderson ? static_cast<int>(x.size()) - 1
                                         : static_cast<int>(x.size());
  JackContext<double> inner_ctx(n_inner, p.theta);
  SymPoly<double> jp = inner_ctx.jack(lam);

  EigenCheckResult r;
  r.lhs = quad_expectation(x, p, which, nodes,
                           [&](const std::vector<double>& y) {
                             return eval_sympoly(jp, y);
                           });
  if (which == KernelKind::DixonAnderson) {
    JackContext<double> outer_ctx(n_inner + 1, p.theta);
    r.rhs = c_eigenvalue(lam, n_inner, p.theta, 0.0) *
            eval_sympoly(outer_ctx.jack(lam), x);
  } else {
    r.rhs = c_eigenvalue(lam, n_inner, p.theta, p.alpha) *
            eval_sympoly(jp, x);
  }
  return r;
}

double density_mass_quadrature(const std::vector<double>& x,
                               const KernelParams& p, KernelKind which,
                               int nodes) {
  return quad_expectation(x, p, which, nodes,
                          [](const std::vector<double>&) { return 1.0; });
}

double kernel_cdf_y1(const std::vector<double>& x, const KernelParams& p,
                     KernelKind which, double t, int nodes) {
  const double theta = p.theta;
  const bool da = which == KernelKind::DixonAnderson;
  const double lo = da ? x[0] : 0.0;
  const double hi = da ? x[1] : x[0];
  if (t <= lo) return 0.0;
  if (t >= hi) return 1.0;
  const double left_exp = da ? theta - 1.0 : theta * (p.alpha + 1.0) - 1.0;
  const double right_exp = theta - 1.0;
  const int n = da ? static_cast<int>(x.size()) - 1 : static_cast<int>(x.size());

  // marginal density of y1 without its two singular endpoint factors
  auto smooth_marginal = [&](double y1) {
    if (n == 1) {
      if (da) return 1.0;
      return 1.0;
    }
    // n == 2: integrate out y2 over its own interval
    if (da) {
      double inner = integrate_jacobi(
          x[1], x[2], theta - 1.0, theta - 1.0, nodes, [&](double y2) {
            return (y2 - y1) * std::pow(y2 - x[0], theta - 1.0);
          });
      return std::pow(x[2] - y1, theta - 1.0) * inner;
    }
    double inner = integrate_jacobi(
        x[0], x[1], theta - 1.0, theta - 1.0, nodes, [&](double y2) {
          return (y2 - y1) * std::pow(y2, theta * (p.alpha + 1.0) - 1.0);
        });
    return std::pow(x[1] - y1, theta - 1.0) * inner;
  };
  if (n > 2) throw std::invalid_argument("kernel_cdf_y1 supports N in {1, 2}");

  double mass = integrate_jacobi(lo, hi, left_exp, right_exp, nodes,
                                 smooth_marginal);
  // integrate the smaller piece so the singular factor always sits at a true
  // interval endpoint
  if (t - lo <= hi - t) {
    double part = integrate_jacobi(lo, t, left_exp, 0.0, nodes, [&](double y1) {
      return std::pow(hi - y1, right_exp) * smooth_marginal(y1);
    });
    return part / mass;
  }
  double part = integrate_jacobi(t, hi, 0.0, right_exp, nodes, [&](double y1) {
    return std::pow(y1 - lo, left_exp) * smooth_marginal(y1);
  });
  return 1.0 - part / mass;
}

}  // namespace betalag
