#pragma once

#include <vector>

namespace betalag {

// Roots of f(y) = sum_k weights[k] / (y - poles[k]) with strictly increasing
// poles and positive weights: exactly one root in each gap between consecutive
// poles (f decreases from +inf to -inf there). Bracketed bisection to machine
// precision, then safeguarded Newton polish.
std::vector<double> secular_roots(const std::vector<double>& poles,
                                  const std::vector<double>& weights);

}  // namespace betalag
