#pragma once

#include <functional>
#include <vector>

namespace betalag {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v);

// Kolmogorov-Smirnov statistics (samples need not be pre-sorted).
double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic critical values at the 1% level.
double ks_critical_one_sample(std::size_t n);
double ks_critical_two_sample(std::size_t n, std::size_t m);

}  // namespace betalag
