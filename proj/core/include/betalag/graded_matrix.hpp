#pragma once

#include "betalag/partition.hpp"
#include "betalag/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace betalag {

// Dense linear operator on span{P_mu : mu in basis}, graded by |mu|.
// Column convention: column k holds the coefficients of the image of the k-th
// basis element, so composition "apply A after B" is A * B.
template <class S>
struct GradedMatrix {
  std::vector<Partition> basis;
  std::vector<std::vector<S>> a;  // a[row][col]

  GradedMatrix() = default;
  explicit GradedMatrix(std::vector<Partition> b) : basis(std::move(b)) {
    a.assign(basis.size(), std::vector<S>(basis.size(), ScalarOps<S>::from_int(0)));
    for (size_t i = 0; i < basis.size(); ++i) index_[basis[i]] = i;
  }

  static GradedMatrix identity(std::vector<Partition> b) {
    GradedMatrix m(std::move(b));
    for (size_t i = 0; i < m.size(); ++i) m.a[i][i] = ScalarOps<S>::from_int(1);
    return m;
  }

  size_t size() const { return basis.size(); }

  size_t index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw std::invalid_argument("GradedMatrix: partition not in basis");
    return it->second;
  }

  S& at(const Partition& row, const Partition& col) {
    return a[index(row)][index(col)];
  }

  friend GradedMatrix operator*(const GradedMatrix& x, const GradedMatrix& y) {
    GradedMatrix z(x.basis);
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (ScalarOps<S>::is_zero(x.a[i][k])) continue;
        for (size_t j = 0; j < n; ++j) z.a[i][j] += x.a[i][k] * y.a[k][j];
      }
    return z;
  }

  friend GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y) {
    GradedMatrix z(x.basis);
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < x.size(); ++j) z.a[i][j] = x.a[i][j] - y.a[i][j];
    return z;
  }

  friend GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y) {
    GradedMatrix z(x.basis);
    for (size_t i = 0; i < x.size(); ++i)
      for (size_t j = 0; j < x.size(); ++j) z.a[i][j] = x.a[i][j] + y.a[i][j];
    return z;
  }

  GradedMatrix scaled(const S& c) const {
    GradedMatrix z(basis);
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j) z.a[i][j] = a[i][j] * c;
    return z;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> w(size(), ScalarOps<S>::from_int(0));
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j) w[i] += a[i][j] * v[j];
    return w;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& row : a)
      for (const S& v : row) m = std::max(m, ScalarOps<S>::abs_to_double(v));
    return m;
  }

  bool is_zero() const {
    for (const auto& row : a)
      for (const S& v : row)
        if (!ScalarOps<S>::is_zero(v)) return false;
    return true;
  }

  // Entries only from strictly higher |col| to strictly lower |row|
  // (nilpotent of index <= max degree + 1).
  bool strictly_lowers_grading() const {
    for (size_t i = 0; i < size(); ++i)
      for (size_t j = 0; j < size(); ++j)
        if (!ScalarOps<S>::is_zero(a[i][j]) &&
            basis[i].weight() >= basis[j].weight())
          return false;
    return true;
  }

 private:
  std::map<Partition, size_t> index_;
};

// exp(t*M) by terminating series: requires M strictly grading-lowering.
template <class S>
GradedMatrix<S> expm_nilpotent(const GradedMatrix<S>& m, const S& t) {
  if (!m.strictly_lowers_grading())
    throw std::invalid_argument("expm_nilpotent: matrix is not grading-lowering");
  GradedMatrix<S> result = GradedMatrix<S>::identity(m.basis);
  GradedMatrix<S> term = GradedMatrix<S>::identity(m.basis);
  int max_deg = 0;
  for (const auto& p : m.basis) max_deg = std::max(max_deg, p.weight());
  for (int k = 1; k <= max_deg; ++k) {
    term = m * term;
    term = term.scaled(t / ScalarOps<S>::from_int(k));
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

// exp(t*M), double precision: terminating series for nilpotent input,
// scaling-and-squaring with a Taylor series otherwise (dimensions are tiny).
GradedMatrix<double> expm(const GradedMatrix<double>& m, double t);

}  // namespace betalag
