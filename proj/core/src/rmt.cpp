#include "betalag/rmt.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace betalag {

namespace {
Eigen::MatrixXd gaussian_real(int m, int n, RngStream& rng) {
  Eigen::MatrixXd g(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  return g;
}

Eigen::MatrixXcd gaussian_complex(int m, int n, RngStream& rng) {
  Eigen::MatrixXcd g(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  return g;
}

std::vector<double> ordered_eigs(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return out;  // Eigen returns them sorted ascending
}
}  // namespace

Eigen::MatrixXd haar_orthogonal(int n, RngStream& rng) {
  Eigen::MatrixXd g = gaussian_real(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd r = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j)
    if (r(j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

Eigen::MatrixXcd haar_unitary(int n, RngStream& rng) {
  Eigen::MatrixXcd g = gaussian_complex(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::VectorXcd r = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j);
    double a = std::abs(d);
    q.col(j) *= (a > 0.0 ? d / a : std::complex<double>(1.0, 0.0));
  }
  return q;
}

Eigen::MatrixXcd gaussian_matrix(MatrixField field, int m, int n,
                                 RngStream& rng) {
  const double s = std::sqrt(0.5);
  if (field == MatrixField::Real)
    return (s * gaussian_real(m, n, rng)).cast<std::complex<double>>();
  return s * gaussian_complex(m, n, rng);
}

std::vector<double> radial_part(const Eigen::MatrixXcd& x) {
  std::vector<double> v = ordered_eigs(x.adjoint() * x);
  for (double& e : v) e = std::max(e, 0.0);
  return v;
}

std::vector<double> eigen_projection_sample(const std::vector<double>& x,
                                            MatrixField field,
                                            RngStream& rng) {
  const int m = static_cast<int>(x.size());
  if (m < 2) throw std::invalid_argument("need x in W^{N+1}, N >= 1");
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(x.data(), m);
  if (field == MatrixField::Real) {
    Eigen::MatrixXd o = haar_orthogonal(m, rng);
    Eigen::MatrixXd h = o.transpose() * d.asDiagonal() * o;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        h.topLeftCorner(m - 1, m - 1));
    return std::vector<double>(es.eigenvalues().data(),
                               es.eigenvalues().data() + m - 1);
  }
  Eigen::MatrixXcd u = haar_unitary(m, rng);
  Eigen::MatrixXcd h = u.adjoint() * d.asDiagonal() * u;
  return ordered_eigs(h.topLeftCorner(m - 1, m - 1));
}

std::vector<double> truncated_radial_sample(const std::vector<double>& z,
                                            MatrixField field, int alpha,
                                            RngStream& rng) {
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0 here");
  const int n = static_cast<int>(z.size());
  Eigen::VectorXd sq(n);
  for (int j = 0; j < n; ++j) {
    if (z[j] < 0.0) throw std::invalid_argument("z must be nonnegative");
    sq(j) = std::sqrt(z[j]);
  }
  const int m = n + alpha + 1;
  Eigen::MatrixXcd v = field == MatrixField::Real
                           ? haar_orthogonal(m, rng).cast<std::complex<double>>()
                           : haar_unitary(m, rng);
  Eigen::MatrixXcd b = v.topLeftCorner(m - 1, n) * sq.asDiagonal();
  return radial_part(b);
}

std::vector<double> laguerre_ensemble_gaussian(int n, MatrixField field,
                                               int alpha, RngStream& rng) {
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0 here");
  return radial_part(gaussian_matrix(field, n + alpha, n, rng));
}

std::vector<double> laguerre_ensemble_sample(int n, double theta, double alpha,
                                             RngStream& rng) {
  if (!(theta > 0.0) || !(alpha > -1.0))
    throw std::invalid_argument("need theta > 0, alpha > -1");
  // bidiagonal chi construction; eigenvalues of B B^T / 2 follow the ensemble
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    b(i - 1, i - 1) = rng.chi(2.0 * theta * (n + alpha - i + 1));
  for (int i = 1; i <= n - 1; ++i) b(i, i - 1) = rng.chi(2.0 * theta * (n - i));
  Eigen::MatrixXd w = 0.5 * (b * b.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (double& e : out) e = std::max(e, 0.0);
  return out;
}

PushforwardPair corner_truncation_pushforward(MatrixField field, int n,
                                              int alpha, long draws,
                                              std::uint64_t seed,
                                              const std::vector<double>& d) {
  if (!d.empty() && static_cast<int>(d.size()) != n + 1)
    throw std::invalid_argument("deterministic singular values need |d| = N+1");
  KernelParams p{field_theta(field), static_cast<double>(alpha), n};
  const int rows = n + alpha + 1, cols = n + 1;
  PushforwardPair out;
  out.lhs.reserve(draws);
  out.rhs.reserve(draws);
  for (long i = 0; i < draws; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    Eigen::MatrixXcd x;
    if (d.empty()) {
      x = gaussian_matrix(field, rows, cols, rng);
    } else {
      Eigen::MatrixXcd v = field == MatrixField::Real
                               ? haar_orthogonal(rows, rng)
                                     .cast<std::complex<double>>()
                               : haar_unitary(rows, rng);
      Eigen::MatrixXcd u = field == MatrixField::Real
                               ? haar_orthogonal(cols, rng)
                                     .cast<std::complex<double>>()
                               : haar_unitary(cols, rng);
      Eigen::MatrixXcd dm = Eigen::MatrixXcd::Zero(rows, cols);
      for (int j = 0; j < cols; ++j) dm(j, j) = d[j];
      x = v * dm * u;
    }
    out.lhs.push_back(sample_composed(radial_part(x), p, rng));
    out.rhs.push_back(radial_part(x.topLeftCorner(rows - 1, cols - 1)));
  }
  return out;
}

}  // namespace betalag
