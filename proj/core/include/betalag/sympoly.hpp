#pragma once

#include "betalag/partition.hpp"
#include "betalag/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace betalag {

// Symmetric polynomial in n_vars variables, stored as coefficients over the
// monomial symmetric basis m_mu (keys have l(mu) <= n_vars). Works for both
// double and exact Rational coefficients.
template <class S>
struct SymPoly {
  int n_vars = 0;
  std::map<Partition, S> coeffs;

  void add(const Partition& mu, const S& c) {
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, inserted] = coeffs.emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) coeffs.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (const auto& [mu, c] : coeffs) d = std::max(d, mu.weight());
    return d;
  }
};

enum class JackOp { E0, E1, D1, D2 };

// All distinct permutations of mu zero-padded to length n, in descending
// lexicographic order starting from the sorted representative.
inline std::vector<std::vector<int>> distinct_permutations(const Partition& mu,
                                                           int n) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  for (int i = 0; i < mu.length(); ++i) v[static_cast<size_t>(i)] = mu.part(i);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

// N! / prod multiplicities!  (number of distinct permutations of the padded mu)
inline long long permutation_count(const Partition& mu, int n) {
  // multinomial over the value multiplicities, zeros included; built as a
  // product of binomials so every intermediate stays integral
  std::vector<int> padded(static_cast<size_t>(n), 0);
  for (int i = 0; i < mu.length(); ++i)
    padded[static_cast<size_t>(i)] = mu.part(i);
  long long count = 1;
  int pos = 0;
  for (size_t i = 0; i < padded.size();) {
    size_t j = i;
    while (j < padded.size() && padded[j] == padded[i]) ++j;
    for (size_t k = 1; k <= j - i; ++k)
      count = count * (++pos) / static_cast<long long>(k);
    i = j;
  }
  return count;
}

namespace detail {

template <class S>
using ExpMap = std::map<std::vector<int>, S>;

template <class S>
void acc_add(ExpMap<S>& acc, std::vector<int> key, const S& c) {
  if (ScalarOps<S>::is_zero(c)) return;
  auto [it, inserted] = acc.emplace(std::move(key), c);
  if (!inserted) it->second += c;
}

// Interaction term 2*theta * sum_{i<j} (x_i^k d_i - x_j^k d_j)/(x_i - x_j)
// applied to the symmetrized pair class of exponent vector `a` at positions
// (i, j); the caller guarantees a[i] >= a[j] so each unordered class is
// processed once (the swapped permutation is skipped).
template <class S>
void pair_interaction(ExpMap<S>& acc, const std::vector<int>& a, size_t i,
                      size_t j, const S& c2t, bool k2 /* k=2 vs k=1 */) {
  const int big = a[i], small = a[j];
  if (big == small) {
    if (k2 && big > 0)
      acc_add(acc, a, c2t * ScalarOps<S>::from_int(big));
    return;
  }
  std::vector<int> t = a;
  if (k2) {
    // a*(x^A y^B + x^B y^A) + (A-B) * sum_{k=1}^{A-B-1} x^{B+k} y^{A-k}
    S end = c2t * ScalarOps<S>::from_int(big);
    t[i] = big;
    t[j] = small;
    acc_add(acc, t, end);
    t[i] = small;
    t[j] = big;
    acc_add(acc, t, end);
    S mid = c2t * ScalarOps<S>::from_int(big - small);
    for (int k = 1; k <= big - small - 1; ++k) {
      t[i] = small + k;
      t[j] = big - k;
      acc_add(acc, t, mid);
    }
  } else {
    // (A-B) * sum_{k=0}^{A-B-1} x^{B+k} y^{A-1-k}
    S mid = c2t * ScalarOps<S>::from_int(big - small);
    for (int k = 0; k <= big - small - 1; ++k) {
      t[i] = small + k;
      t[j] = big - 1 - k;
      acc_add(acc, t, mid);
    }
  }
}

// Fold an exponent-vector map (necessarily a symmetric polynomial) back into
// the monomial symmetric basis: read the coefficient at the sorted
// representative of each orbit.
template <class S>
SymPoly<S> fold_symmetric(const ExpMap<S>& acc, int n_vars) {
  SymPoly<S> out;
  out.n_vars = n_vars;
  for (const auto& [key, c] : acc) {
    if (!std::is_sorted(key.rbegin(), key.rend())) continue;
    out.add(Partition(key), c);
  }
  return out;
}

}  // namespace detail

// Exact action of E0, E1, D1 or D2 (with parameter theta) on a symmetric
// polynomial in the monomial basis, by term-by-term differentiation of the
// distinct-permutation expansion.
template <class S>
SymPoly<S> apply_op(JackOp op, const S& theta, const SymPoly<S>& f) {
  const int n = f.n_vars;
  if (op == JackOp::E1) {
    SymPoly<S> out;
    out.n_vars = n;
    for (const auto& [mu, c] : f.coeffs)
      out.add(mu, c * ScalarOps<S>::from_int(mu.weight()));
    return out;
  }
  detail::ExpMap<S> acc;
  const S two_theta = theta * ScalarOps<S>::from_int(2);
  for (const auto& [mu, c] : f.coeffs) {
    for (const auto& a : distinct_permutations(mu, n)) {
      switch (op) {
        case JackOp::E0:
          for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::vector<int> t = a;
            --t[i];
            detail::acc_add(acc, std::move(t), c * ScalarOps<S>::from_int(a[i]));
          }
          break;
        case JackOp::D1: {
          for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 2) continue;
            std::vector<int> t = a;
            --t[i];
            detail::acc_add(
                acc, std::move(t),
                c * ScalarOps<S>::from_int(
                        static_cast<long long>(a[i]) * (a[i] - 1)));
          }
          for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
              if (a[i] >= a[j])
                detail::pair_interaction(acc, a, i, j, S(c * two_theta), false);
          break;
        }
        case JackOp::D2: {
          long long diag = 0;
          for (int ai : a) diag += static_cast<long long>(ai) * (ai - 1);
          detail::acc_add(acc, a, c * ScalarOps<S>::from_int(diag));
          for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
              if (a[i] >= a[j])
                detail::pair_interaction(acc, a, i, j, S(c * two_theta), true);
          break;
        }
        case JackOp::E1:
          break;  // handled above
      }
    }
  }
  return detail::fold_symmetric(acc, n);
}

template <class S>
S eval_sympoly(const SymPoly<S>& f, const std::vector<S>& x) {
  if (static_cast<int>(x.size()) != f.n_vars)
    throw std::invalid_argument("eval_sympoly: dimension mismatch");
  S total = ScalarOps<S>::from_int(0);
  for (const auto& [mu, c] : f.coeffs) {
    S msum = ScalarOps<S>::from_int(0);
    for (const auto& a : distinct_permutations(mu, f.n_vars)) {
      S prod = ScalarOps<S>::from_int(1);
      for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < a[i]; ++k) prod *= x[i];
      msum += prod;
    }
    total += c * msum;
  }
  return total;
}

template <class S>
S eval_at_ones(const SymPoly<S>& f) {
  S total = ScalarOps<S>::from_int(0);
  for (const auto& [mu, c] : f.coeffs)
    total += c * ScalarOps<S>::from_int(permutation_count(mu, f.n_vars));
  return total;
}

// f(1_N + x) expanded back over the monomial basis in x.
template <class S>
SymPoly<S> shift_by_ones(const SymPoly<S>& f) {
  const int n = f.n_vars;
  detail::ExpMap<S> acc;
  std::vector<long long> binom_row;
  auto binom = [](int a, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (a - i + 1) / i;
    return b;
  };
  for (const auto& [mu, c] : f.coeffs) {
    for (const auto& a : distinct_permutations(mu, n)) {
      // odometer over k_i <= a_i
      std::vector<int> k(a.size(), 0);
      for (;;) {
        S coef = c;
        for (size_t i = 0; i < a.size(); ++i)
          coef *= ScalarOps<S>::from_int(binom(a[i], k[i]));
        detail::acc_add(acc, k, coef);
        size_t pos = 0;
        while (pos < k.size() && k[pos] == a[pos]) {
          k[pos] = 0;
          ++pos;
        }
        if (pos == k.size()) break;
        ++k[pos];
      }
    }
  }
  return detail::fold_symmetric(acc, n);
}

// (x_1 + ... + x_N)^n in the monomial basis: coefficient of m_mu is the
// multinomial n! / prod mu_i!.
template <class S>
SymPoly<S> power_of_p1(int n, int n_vars) {
  SymPoly<S> out;
  out.n_vars = n_vars;
  for (const Partition& mu : partitions_of(n, n_vars)) {
    long long coef = 1;
    int used = 0;
    for (int i = 0; i < mu.length(); ++i) {
      for (int k = 1; k <= mu.part(i); ++k) coef = coef * (++used) / k;
    }
    out.add(mu, ScalarOps<S>::from_int(coef));
  }
  return out;
}

}  // namespace betalag
