#pragma once

#include "betalag/kernels.hpp"
#include "betalag/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace betalag {

// Matrix field; fixes theta = beta/2 of the realized kernels.
enum class MatrixField { Real, Complex };  // theta = 1/2, 1

inline double field_theta(MatrixField f) {
  return f == MatrixField::Real ? 0.5 : 1.0;
}

// Haar-distributed orthogonal / unitary matrix: Gaussian matrix, QR, then
// diagonal phase correction so the law is exactly Haar.
Eigen::MatrixXd haar_orthogonal(int n, RngStream& rng);
Eigen::MatrixXcd haar_unitary(int n, RngStream& rng);

// Standard Gaussian m x n matrix for the field: real entries N(0, 1/2),
// complex entries with independent N(0, 1/2) parts (E|z|^2 = 1), matching the
// e^{-tr X*X} ensemble density.
Eigen::MatrixXcd gaussian_matrix(MatrixField field, int m, int n,
                                 RngStream& rng);

// Ordered squared singular values of X (eigenvalues of X*X).
std::vector<double> radial_part(const Eigen::MatrixXcd& x);

// Ordered eigenvalues of the top-left N x N corner of U* diag(x) U with U
// Haar on N+1; realizes the Dixon-Anderson kernel at theta = 1/2 or 1.
std::vector<double> eigen_projection_sample(const std::vector<double>& x,
                                            MatrixField field, RngStream& rng);

// Ordered squared singular values of the (N+alpha) x N truncation of a Haar
// matrix of size N+alpha+1 times diag(sqrt z); realizes the Lambda kernel.
std::vector<double> truncated_radial_sample(const std::vector<double>& z,
                                            MatrixField field, int alpha,
                                            RngStream& rng);

// Sample from the Laguerre ensemble m_{theta,alpha}^N: Gaussian realization
// rad of an (N+alpha) x N Gaussian matrix for theta in {1/2, 1}; bidiagonal
// chi construction for general theta (alpha any real > -1 there).
std::vector<double> laguerre_ensemble_gaussian(int n, MatrixField field,
                                               int alpha, RngStream& rng);
std::vector<double> laguerre_ensemble_sample(int n, double theta, double alpha,
                                             RngStream& rng);

// Paired draws for the corner-truncation identity: for a bi-invariant
// (N+alpha+1) x (N+1) random X,
//   lhs: rad_{N+1}(X) pushed through the composed kernel,
//   rhs: rad_N of the top-left (N+alpha) x N corner of X.
// d empty uses Gaussian X; otherwise X = V diag(d) U with Haar V, U and the
// deterministic singular values d (|d| = N+1).
struct PushforwardPair {
  std::vector<std::vector<double>> lhs, rhs;
};
PushforwardPair corner_truncation_pushforward(MatrixField field, int n,
                                              int alpha, long draws,
                                              std::uint64_t seed,
                                              const std::vector<double>& d = {});

}  // namespace betalag
