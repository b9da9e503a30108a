#pragma once

#include "betalag/gammafn.hpp"
#include "betalag/graded_matrix.hpp"
#include "betalag/partition.hpp"
#include "betalag/rational.hpp"
#include "betalag/sympoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace betalag {

// Default desk-scale caps; monomial bases grow combinatorially past this.
inline constexpr int kDefaultMaxWeight = 12;
inline constexpr int kDefaultMaxVars = 8;

// D2 eigenvalue e(lambda, N, theta) = 2B(lambda') - 2 theta B(lambda)
//   + 2 theta (N-1) |lambda|
template <class S>
S d2_eigenvalue(const Partition& lam, int n_vars, const S& theta) {
  S e = ScalarOps<S>::from_int(2 * lam.conjugate().b_stat());
  e += theta * ScalarOps<S>::from_int(-2 * lam.b_stat() +
                                      2 * (n_vars - 1) * lam.weight());
  return e;
}

// Closed-form P_lambda(1_N) = prod_{i<j}(lambda_i - lambda_j + theta(j-i))_theta
//   * prod_k Gamma(theta)/Gamma(theta k), via log-gamma.
double jack_at_ones_closed(const Partition& lam, int n_vars, double theta);

// Per-(N, theta) construction context with an internally synchronized memo
// cache: Jack polynomials in the monomial basis (D2 dominance-triangular
// recursion), evaluations at 1_N, generalized binomial coefficients, and the
// monomial -> Jack change of basis.
template <class S>
class JackContext {
 public:
  JackContext(int n_vars, S theta, int max_weight = kDefaultMaxWeight)
      : n_(n_vars), theta_(std::move(theta)), max_weight_(max_weight) {
    if (n_vars < 1 || n_vars > kDefaultMaxVars)
      throw std::invalid_argument("JackContext: n_vars out of range");
    if (to_double(theta_) <= 0.0)
      throw std::invalid_argument("JackContext: theta must be > 0");
  }

  int n_vars() const { return n_; }
  const S& theta() const { return theta_; }

  // P_lambda^theta in the monomial basis, monic in m_lambda.
  SymPoly<S> jack(const Partition& lam) {
    std::lock_guard<std::mutex> lock(mutex_);
    return jack_locked(lam);
  }

  // P_lambda(1_N), exact via the monomial expansion (closed form is the
  // separate jack_at_ones_closed, cross-checked in tests).
  S at_ones(const Partition& lam) {
    std::lock_guard<std::mutex> lock(mutex_);
    return at_ones_locked(lam);
  }

  S eval(const Partition& lam, const std::vector<S>& x) {
    SymPoly<S> p = jack(lam);
    return eval_sympoly(p, x);
  }

  // binom(lambda, rho)_theta from the expansion of P_lambda(1_N + x).
  S gen_binomial(const Partition& lam, const Partition& rho) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = binom_cache_.find(lam);
    if (it == binom_cache_.end()) {
      SymPoly<S> shifted = shift_by_ones(jack_locked(lam));
      std::map<Partition, S> jc = to_jack_locked(shifted);
      std::map<Partition, S> normalized;
      S denom = at_ones_locked(lam);
      for (auto& [rho2, c] : jc)
        normalized[rho2] = c * at_ones_locked(rho2) / denom;
      it = binom_cache_.emplace(lam, std::move(normalized)).first;
    }
    auto jt = it->second.find(rho);
    return jt == it->second.end() ? ScalarOps<S>::from_int(0) : jt->second;
  }

  // Coefficients of f over the Jack basis (graded triangular elimination).
  std::map<Partition, S> to_jack(const SymPoly<S>& f) {
    std::lock_guard<std::mutex> lock(mutex_);
    return to_jack_locked(f);
  }

 private:
  SymPoly<S> jack_locked(const Partition& lam) {
    if (lam.length() > n_)
      throw std::invalid_argument("jack: l(lambda) > n_vars");
    if (lam.weight() > max_weight_)
      throw std::invalid_argument("jack: |lambda| exceeds the degree cap");
    auto it = jack_cache_.find(lam);
    if (it != jack_cache_.end()) return it->second;

    const S e_lam = d2_eigenvalue(lam, n_, theta_);
    SymPoly<S> p;
    p.n_vars = n_;
    p.add(lam, ScalarOps<S>::from_int(1));
    SymPoly<S> m_lam = p;
    SymPoly<S> image = apply_op(JackOp::D2, theta_, m_lam);

    for (const Partition& nu : partitions_of(lam.weight(), n_)) {
      if (nu == lam) continue;
      // basis order is dominance-compatible: contributions to m_nu come only
      // from partitions already processed
      auto ct = image.coeffs.find(nu);
      if (ct == image.coeffs.end()) continue;
      S gap = e_lam - d2_eigenvalue(nu, n_, theta_);
      if (ScalarOps<S>::is_zero(gap))
        throw std::runtime_error("jack: zero eigenvalue gap at " + nu.str());
      S c = ct->second / gap;
      if (ScalarOps<S>::is_zero(c)) continue;
      p.add(nu, c);
      SymPoly<S> m_nu;
      m_nu.n_vars = n_;
      m_nu.add(nu, c);
      SymPoly<S> d2_nu = apply_op(JackOp::D2, theta_, m_nu);
      for (const auto& [key, val] : d2_nu.coeffs) image.add(key, val);
    }
    jack_cache_.emplace(lam, p);
    return p;
  }

  S at_ones_locked(const Partition& lam) {
    auto it = ones_cache_.find(lam);
    if (it != ones_cache_.end()) return it->second;
    S v = betalag::eval_at_ones(jack_locked(lam));
    ones_cache_.emplace(lam, v);
    return v;
  }

  std::map<Partition, S> to_jack_locked(const SymPoly<S>& f) {
    // split by degree; within a degree, eliminate from dominance-largest down
    std::map<int, SymPoly<S>> by_degree;
    for (const auto& [mu, c] : f.coeffs) {
      auto& g = by_degree[mu.weight()];
      g.n_vars = n_;
      g.add(mu, c);
    }
    std::map<Partition, S> out;
    for (auto& [deg, g] : by_degree) {
      for (const Partition& nu : partitions_of(deg, n_)) {
        auto ct = g.coeffs.find(nu);
        if (ct == g.coeffs.end()) continue;
        S c = ct->second;
        if (ScalarOps<S>::is_zero(c)) continue;
        out[nu] = c;
        SymPoly<S> pn = jack_locked(nu);
        for (const auto& [mu, v] : pn.coeffs) {
          S neg = c * v;
          g.add(mu, ScalarOps<S>::from_int(0) - neg);
        }
      }
    }
    return out;
  }

  int n_;
  S theta_;
  int max_weight_;
  std::mutex mutex_;
  std::map<Partition, SymPoly<S>> jack_cache_;
  std::map<Partition, S> ones_cache_;
  std::map<Partition, std::map<Partition, S>> binom_cache_;
};

// Matrix of E0/E1/D1/D2 on span{P_mu : mu contained in lmax, l(mu) <= N},
// assembled from the eigen relations (E1, D2 diagonal; E0, D1 from the
// generalized-binomial lowering formulas).
template <class S>
GradedMatrix<S> op_matrix(JackOp which, const Partition& lmax,
                          JackContext<S>& ctx) {
  GradedMatrix<S> m(enumerate_contained(lmax, ctx.n_vars()));
  const S theta = ctx.theta();
  for (const Partition& mu : m.basis) {
    switch (which) {
      case JackOp::E1:
        m.at(mu, mu) = ScalarOps<S>::from_int(mu.weight());
        break;
      case JackOp::D2:
        m.at(mu, mu) = d2_eigenvalue(mu, ctx.n_vars(), theta);
        break;
      case JackOp::E0:
      case JackOp::D1: {
        S ones_mu = ctx.at_ones(mu);
        for (int i = 1; i <= mu.length(); ++i) {
          auto low = mu.lower(i);
          if (!low) continue;  // vanishing lowering: term omitted
          S coef = ctx.gen_binomial(mu, *low) * ones_mu / ctx.at_ones(*low);
          if (which == JackOp::D1)
            coef = coef * (ScalarOps<S>::from_int(mu.part(i - 1) - 1) +
                           theta * ScalarOps<S>::from_int(ctx.n_vars() - i));
          m.at(*low, mu) += coef;
        }
        break;
      }
    }
  }
  return m;
}

}  // namespace betalag
