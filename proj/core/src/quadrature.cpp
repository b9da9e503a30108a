#include "betalag/quadrature.hpp"

#include "betalag/gammafn.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace betalag {

namespace {

JacobiRule build_rule(double p, double q, int n) {
  if (!(p > -1.0) || !(q > -1.0))
    throw std::invalid_argument("jacobi_rule: exponents must be > -1");
  if (n < 1) throw std::invalid_argument("jacobi_rule: need n >= 1");

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  auto diag = [&](int k) {
    if (k == 0) return (q - p) / (p + q + 2.0);
    double s = 2.0 * k + p + q;
    return (q * q - p * p) / (s * (s + 2.0));
  };
  auto offdiag2 = [&](int k) {  // beta_k, k >= 1
    if (k == 1)
      return 4.0 * (p + 1.0) * (q + 1.0) /
             ((p + q + 2.0) * (p + q + 2.0) * (p + q + 3.0));
    double s = 2.0 * k + p + q;
    return 4.0 * k * (k + p) * (k + q) * (k + p + q) /
           (s * s * (s + 1.0) * (s - 1.0));
  };
  for (int i = 0; i < n; ++i) t(i, i) = diag(i);
  for (int i = 1; i < n; ++i) {
    double b = std::sqrt(offdiag2(i));
    t(i, i - 1) = b;
    t(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  double mu0 = std::exp((p + q + 1.0) * std::log(2.0) + log_gamma(p + 1.0) +
                        log_gamma(q + 1.0) - log_gamma(p + q + 2.0));
  JacobiRule rule;
  rule.p = p;
  rule.q = q;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

std::map<std::tuple<double, double, int>, JacobiRule> g_cache;
std::mutex g_cache_mutex;

}  // namespace

const JacobiRule& jacobi_rule(double p, double q, int n) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_tuple(p, q, n);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) it = g_cache.emplace(key, build_rule(p, q, n)).first;
  return it->second;
}

double integrate_jacobi(double a, double b, double exp_a, double exp_b, int n,
                        const std::function<double(double)>& f) {
  if (!(b > a)) return 0.0;
  // y = a + (b-a)(1+u)/2: (y-a)^{exp_a} matches (1+u)^q, (b-y)^{exp_b} matches
  // (1-u)^p
  const JacobiRule& rule = jacobi_rule(exp_b, exp_a, n);
  const double half = 0.5 * (b - a);
  double total = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    double y = a + half * (1.0 + rule.nodes[i]);
    total += rule.weights[i] * f(y);
  }
  return total * std::pow(half, exp_a + exp_b + 1.0);
}

}  // namespace betalag
