#pragma once

#include "betalag/chamber.hpp"
#include "betalag/jack.hpp"
#include "betalag/partition.hpp"
#include "betalag/rational.hpp"
#include "betalag/rng.hpp"

#include <utility>
#include <vector>

namespace betalag {

struct KernelParams {
  double theta = 1.0;   // theta = beta/2 > 0
  double alpha = 0.0;   // alpha > -1
  int n = 1;            // N

  void validate() const;
};

// Dixon-Anderson kernel L_theta^{N+1,N}: x in W^{N+1} -> interlaced y in W^N.
// Roots of the Dirichlet(theta,...,theta)-weighted random polynomial; tied
// coordinates of x are inherited exactly (root continuity).
std::vector<double> sample_dixon_anderson(const std::vector<double>& x,
                                          double theta, RngStream& rng);

// Kernel Lambda_{theta,alpha}^{N,N}: x in W^N_>= -> y with
// 0 <= y_1 <= x_1 <= y_2 <= ... <= y_N <= x_N.  Dirichlet weights
// ((alpha+1)theta, theta, ..., theta) with the extra pole x_0 = 0.
std::vector<double> sample_lambda(const std::vector<double>& x,
                                  const KernelParams& p, RngStream& rng);

// Composed kernel Lambda_{theta,alpha}^{N+1,N} = L Lambda: x in W^{N+1}_>=.
std::vector<double> sample_composed(const std::vector<double>& x,
                                    const KernelParams& p, RngStream& rng);

// log density of L_theta^{N+1,N}(x, y); requires strict interior x and
// theta >= 1/2 (the paper's density hypothesis); -inf outside the
// interlacing set.
double log_density_dixon_anderson(const std::vector<double>& x,
                                  const std::vector<double>& y, double theta);
double density_dixon_anderson(const std::vector<double>& x,
                              const std::vector<double>& y, double theta);

// log density of Lambda_{theta,alpha}^{N,N}(x, y); requires x strictly
// interior with x_1 > 0 and theta >= 1/2.
double log_density_lambda(const std::vector<double>& x,
                          const std::vector<double>& y,
                          const KernelParams& p);
double density_lambda(const std::vector<double>& x,
                      const std::vector<double>& y, const KernelParams& p);

// c(lambda, N, theta; alpha) = prod_i ((N+alpha+1-i)theta)_{lambda_i}
//                                   / ((N+alpha+2-i)theta)_{lambda_i}
double c_eigenvalue(const Partition& lam, int n, double theta, double alpha);
Rational c_eigenvalue_rational(const Partition& lam, int n,
                               const Rational& theta, const Rational& alpha);

enum class KernelKind { DixonAnderson, Lambda };

struct EigenCheckResult {
  double lhs = 0.0;  // quadrature of P_lambda against the kernel density
  double rhs = 0.0;  // c * P_lambda(x)
};

// Deterministic singular-quadrature verification of the eigenrelations
// (Lemma 2.1 for L, Theorem 2.2 for Lambda); N in {1, 2}.
EigenCheckResult eigen_check_quadrature(const Partition& lam,
                                        const std::vector<double>& x,
                                        const KernelParams& p, KernelKind which,
                                        int nodes = 96);

// integral of the kernel density over the interlacing set (should be 1)
double density_mass_quadrature(const std::vector<double>& x,
                               const KernelParams& p, KernelKind which,
                               int nodes = 96);

// CDF of the lowest coordinate y_1 under the kernel, by quadrature (N <= 2);
// used as the one-sample Kolmogorov-Smirnov oracle.
double kernel_cdf_y1(const std::vector<double>& x, const KernelParams& p,
                     KernelKind which, double t, int nodes = 96);

}  // namespace betalag
