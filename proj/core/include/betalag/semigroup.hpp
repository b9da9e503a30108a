#pragma once

#include "betalag/chamber.hpp"
#include "betalag/graded_matrix.hpp"
#include "betalag/jack.hpp"
#include "betalag/kernels.hpp"
#include "betalag/rng.hpp"

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

namespace betalag {

enum class GeneratorKind { Laguerre, LaguerreOU };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Laguerre;
  double theta = 1.0;
  double alpha = 0.0;
  int n = 1;

  void validate() const;           // theta > 0, alpha > -1, N >= 1
  void validate_simulation() const;  // additionally theta >= 1/2 (beta >= 1)
};

// Generator on span{P_mu : mu contained in lmax}:
//   Laguerre     A = D1 + theta(alpha+1) E0            (strictly lowering)
//   LaguerreOU   A - E1                                (diagonal + lowering)
// Templated over the scalar so the same assembly runs in exact rationals.
template <class S>
GradedMatrix<S> generator_matrix(GeneratorKind kind, const S& theta,
                                 const S& alpha, const Partition& lmax,
                                 JackContext<S>& ctx) {
  GradedMatrix<S> m = op_matrix(JackOp::D1, lmax, ctx);
  GradedMatrix<S> e0 = op_matrix(JackOp::E0, lmax, ctx);
  S c = theta * (alpha + ScalarOps<S>::from_int(1));
  m = m + e0.scaled(c);
  if (kind == GeneratorKind::LaguerreOU)
    m = m - op_matrix(JackOp::E1, lmax, ctx);
  return m;
}

GradedMatrix<double> generator_matrix(const GeneratorSpec& spec,
                                      const Partition& lmax);

// e^{tA}: terminating series for the Laguerre kind, scaling-and-squaring
// for the OU kind.
GradedMatrix<double> semigroup_matrix(const GeneratorSpec& spec,
                                      const Partition& lmax, double t);

// Diagonal kernel matrices (eigenbasis of the kernels, Lemma 2.1 / Thm 2.2).
template <class S>
GradedMatrix<S> lambda_kernel_matrix(int n, const S& theta, const S& alpha,
                                     const Partition& lmax) {
  GradedMatrix<S> m(enumerate_contained(lmax, n));
  for (const Partition& mu : m.basis) {
    if constexpr (std::is_same_v<S, double>)
      m.at(mu, mu) = c_eigenvalue(mu, n, theta, alpha);
    else
      m.at(mu, mu) = c_eigenvalue_rational(mu, n, theta, alpha);
  }
  return m;
}

template <class S>
GradedMatrix<S> dixon_kernel_matrix(int n, const S& theta,
                                    const Partition& lmax) {
  return lambda_kernel_matrix(n, theta, ScalarOps<S>::from_int(0), lmax);
}

// Which intertwining identity a residual check exercises.
enum class IntertwineKind {
  LambdaShifted,   // A_{alpha+1} Lambda = Lambda A_alpha     (same N)
  DixonCrossN,     // A^{N+1}_alpha L = L A^N_{alpha+1}        (cross N)
  ComposedFixed,   // A^{N+1}_alpha (L Lambda) = (L Lambda) A^N_alpha
};

// relative max-abs residual of the generator-level matrix identity
// (scaled by the larger of the two product magnitudes)
double check_generator_intertwine(GeneratorKind kind, IntertwineKind which,
                                  double theta, double alpha,
                                  const Partition& lmax, int n);
// exact-rational variant: returns true iff the residual matrix is exactly 0
bool check_generator_intertwine_exact(GeneratorKind kind, IntertwineKind which,
                                      const Rational& theta,
                                      const Rational& alpha,
                                      const Partition& lmax, int n);

// relative max-abs residual of the exponentiated identity e^{tA'} K = K e^{tA}
double check_semigroup_intertwine(GeneratorKind kind, IntertwineKind which,
                                  double theta, double alpha,
                                  const Partition& lmax, int n, double t);
// exact-rational variant via the power chain K A^k = (A')^k K for
// k = 0..dim (implies the semigroup identity termwise)
bool check_semigroup_intertwine_exact(GeneratorKind kind, IntertwineKind which,
                                      const Rational& theta,
                                      const Rational& alpha,
                                      const Partition& lmax, int n);

struct SdeConfig {
  double step = 1e-3;
  double t_end = 0.0;
  long paths = 1;

  void validate() const;
};

// One full-truncation Euler-Maruyama step (in place); keeps x sorted.
void sde_step(const GeneratorSpec& spec, std::vector<double>& x, double dt,
              RngStream& rng);

// Ensemble of terminal states; path i uses RngStream(seed, i), so the result
// is independent of the worker count.
std::vector<std::vector<double>> simulate_sde(const GeneratorSpec& spec,
                                              const std::vector<double>& x0,
                                              const SdeConfig& cfg,
                                              std::uint64_t seed,
                                              int n_threads = 0);

// Single recorded trajectory (for the CLI path emitter).
std::vector<std::pair<double, std::vector<double>>> simulate_sde_path(
    const GeneratorSpec& spec, const std::vector<double>& x0, double step,
    double t_end, RngStream& rng);

struct MomentEstimate {
  double mean = 0.0;
  double se = 0.0;
};

// Monte Carlo E[p(X)] with standard error over an ensemble of states; p is
// symmetric, so symmetrization of the empirical measure acts trivially here.
MomentEstimate symmetrized_moment(const std::vector<std::vector<double>>& states,
                                  const SymPoly<double>& p);

}  // namespace betalag
