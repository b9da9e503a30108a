#include "betalag/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace betalag {

MeanSe mean_se(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean_se: empty sample");
  double sum = 0.0;
  for (double x : v) sum += x;
  MeanSe m;
  m.mean = sum / v.size();
  double ss = 0.0;
  for (double x : v) ss += (x - m.mean) * (x - m.mean);
  double n = static_cast<double>(v.size());
  m.se = v.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  return m;
}

double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    double t = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_one_sample(std::size_t n) {
  // asymptotic Kolmogorov quantile at 1%: c(0.01) = 1.628
  return 1.628 / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(std::size_t n, std::size_t m) {
  double nn = static_cast<double>(n), mm = static_cast<double>(m);
  return 1.628 * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace betalag
