#include "betalag/graded_matrix.hpp"

#include <cmath>

namespace betalag {

GradedMatrix<double> expm(const GradedMatrix<double>& m, double t) {
  if (m.strictly_lowers_grading()) return expm_nilpotent(m, t);
  GradedMatrix<double> a = m.scaled(t);
  double norm = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double row = 0.0;
    for (size_t j = 0; j < a.size(); ++j) row += std::abs(a.a[i][j]);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  a = a.scaled(std::ldexp(1.0, -squarings));

  GradedMatrix<double> result = GradedMatrix<double>::identity(a.basis);
  GradedMatrix<double> term = GradedMatrix<double>::identity(a.basis);
  for (int k = 1; k <= 30; ++k) {
    term = a * term;
    term = term.scaled(1.0 / k);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace betalag
