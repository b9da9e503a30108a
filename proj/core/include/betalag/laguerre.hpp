#pragma once

#include "betalag/gammafn.hpp"
#include "betalag/graded_matrix.hpp"
#include "betalag/jack.hpp"
#include "betalag/kernels.hpp"
#include "betalag/semigroup.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace betalag {

// Multivariate Laguerre polynomial L_lambda^a in the Jack basis:
//   L = (1/|lambda|!) sum_{mu <= lambda} (-1)^{|mu|} binom(lambda,mu)
//         * prod_i (a+1+theta(N-i))_{lambda_i} / (a+1+theta(N-i))_{mu_i}
//         * P_mu / P_mu(1_N)
// The alpha correspondence is a = theta(alpha+1) - 1.
template <class S>
std::map<Partition, S> laguerre_jack_coeffs(const Partition& lam, const S& a,
                                            JackContext<S>& ctx) {
  const S theta = ctx.theta();
  const int n = ctx.n_vars();
  if (lam.length() > n)
    throw std::invalid_argument("laguerre: l(lambda) > n_vars");
  // (a+1+theta(N-i))_{kappa_i} = gen_pochhammer(a+1+theta(N-1), kappa, theta)
  const S base = a + ScalarOps<S>::from_int(1) +
                 theta * ScalarOps<S>::from_int(n - 1);
  const S top = gen_pochhammer(base, lam, theta);
  S fact = ScalarOps<S>::from_int(1);
  for (int k = 2; k <= lam.weight(); ++k) fact *= ScalarOps<S>::from_int(k);

  std::map<Partition, S> out;
  for (const Partition& mu : enumerate_contained(lam, n)) {
    S binom = ctx.gen_binomial(lam, mu);
    if (ScalarOps<S>::is_zero(binom)) continue;
    S denom = gen_pochhammer(base, mu, theta);
    if (ScalarOps<S>::is_zero(denom))
      throw std::domain_error("laguerre: Pochhammer pole at " + mu.str());
    S c = binom * top / (denom * fact * ctx.at_ones(mu));
    if (mu.weight() % 2 == 1) c = ScalarOps<S>::from_int(0) - c;
    if (!ScalarOps<S>::is_zero(c)) out[mu] = c;
  }
  return out;
}

// Rodrigues construction of the same object:
//   ((-1)^{|lambda|}/|lambda|!) exp(-(D1 + (a+1)E0)) P_lambda / P_lambda(1_N)
// (the exponential terminates: the operator strictly lowers degree).
template <class S>
std::map<Partition, S> rodrigues_laguerre(const Partition& lam, const S& a,
                                          JackContext<S>& ctx) {
  const S theta = ctx.theta();
  // alpha with theta(alpha+1) = a+1
  const S alpha = (a + ScalarOps<S>::from_int(1)) / theta -
                  ScalarOps<S>::from_int(1);
  GradedMatrix<S> gen =
      generator_matrix(GeneratorKind::Laguerre, theta, alpha, lam, ctx);
  GradedMatrix<S> e = expm_nilpotent(gen, ScalarOps<S>::from_int(-1));
  std::vector<S> v(e.size(), ScalarOps<S>::from_int(0));
  v[e.index(lam)] = ScalarOps<S>::from_int(1) / ctx.at_ones(lam);
  std::vector<S> w = e.apply(v);
  S fact = ScalarOps<S>::from_int(1);
  for (int k = 2; k <= lam.weight(); ++k) fact *= ScalarOps<S>::from_int(k);
  S sign = ScalarOps<S>::from_int(lam.weight() % 2 == 0 ? 1 : -1);
  std::map<Partition, S> out;
  for (size_t i = 0; i < e.size(); ++i) {
    S c = sign * w[i] / fact;
    if (!ScalarOps<S>::is_zero(c)) out[e.basis[i]] = c;
  }
  return out;
}

// Action of the kernel on L_lambda^a (a = theta(alpha+1)-1):
//   Lambda L_lambda^a = c(lambda,N,theta;alpha) * L_lambda^{a+theta}
template <class S>
std::pair<std::map<Partition, S>, S> lambda_on_laguerre(const Partition& lam,
                                                        const S& alpha,
                                                        JackContext<S>& ctx) {
  const S theta = ctx.theta();
  const S a = theta * (alpha + ScalarOps<S>::from_int(1)) -
              ScalarOps<S>::from_int(1);
  S factor;
  if constexpr (std::is_same_v<S, double>)
    factor = c_eigenvalue(lam, ctx.n_vars(), theta, alpha);
  else
    factor = c_eigenvalue_rational(lam, ctx.n_vars(), theta, alpha);
  return {laguerre_jack_coeffs(lam, S(a + theta), ctx), factor};
}

// C-normalization scalar r_lambda with C_lambda = r_lambda P_lambda, fixed by
// the constraint sum_{|lambda|=n} C_lambda = (x_1+...+x_N)^n.
template <class S>
S c_normalization(const Partition& lam, JackContext<S>& ctx) {
  if (lam.length() > ctx.n_vars())
    throw std::invalid_argument("c_normalization: l(lambda) > n_vars");
  std::map<Partition, S> jc =
      ctx.to_jack(power_of_p1<S>(lam.weight(), ctx.n_vars()));
  auto it = jc.find(lam);
  return it == jc.end() ? ScalarOps<S>::from_int(0) : it->second;
}

struct HypergeometricSpec {
  std::vector<double> upper;  // a_1 .. a_p
  std::vector<double> lower;  // b_1 .. b_q
  int max_degree = 6;
};

struct PfqValue {
  double value = 0.0;
  double last_shell = 0.0;  // magnitude of the final degree shell (heuristic)
};

// Truncated pFq series  sum_{|lambda| <= max_degree}
//   prod(a_i)_lambda / prod(b_j)_lambda * C_lambda(x) / |lambda|!
PfqValue pfq_truncated(const HypergeometricSpec& spec,
                       const std::vector<double>& x, JackContext<double>& ctx);

// Termwise parameter-shift identity behind the kernel action on pFq: with
// b = (beta+N)theta,   c(lambda,N,theta;beta) * (b+theta)_lambda = (b)_lambda.
// Returns the max relative residual over |lambda| <= max_degree.
double pfq_shift_residual(double theta, double beta, int n, int max_degree);
// exact-rational variant
bool pfq_shift_exact(const Rational& theta, const Rational& beta, int n,
                     int max_degree);

}  // namespace betalag
