#include "betalag/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace betalag {

void GeneratorSpec::validate() const {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  if (!(alpha > -1.0)) throw std::invalid_argument("alpha must be > -1");
  if (n < 1) throw std::invalid_argument("N must be >= 1");
}

void GeneratorSpec::validate_simulation() const {
  validate();
  if (!(theta >= 0.5))
    throw std::invalid_argument("SDE simulation requires theta >= 1/2");
}

void SdeConfig::validate() const {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
  if (paths < 1) throw std::invalid_argument("paths must be >= 1");
}

GradedMatrix<double> generator_matrix(const GeneratorSpec& spec,
                                      const Partition& lmax) {
  spec.validate();
  JackContext<double> ctx(spec.n, spec.theta);
  return generator_matrix(spec.kind, spec.theta, spec.alpha, lmax, ctx);
}

GradedMatrix<double> semigroup_matrix(const GeneratorSpec& spec,
                                      const Partition& lmax, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  return expm(generator_matrix(spec, lmax), t);
}

namespace {

// LHS/RHS pair of the generator-level identity  A_top K = K A_bot
template <class S>
struct IntertwinePair {
  GradedMatrix<S> lhs_left;   // A_top
  GradedMatrix<S> rhs_right;  // A_bot
  GradedMatrix<S> kernel;     // K
};

template <class S>
IntertwinePair<S> make_pair_matrices(GeneratorKind kind, IntertwineKind which,
                                     const S& theta, const S& alpha,
                                     const Partition& lmax, int n) {
  const S one = ScalarOps<S>::from_int(1);
  IntertwinePair<S> p;
  switch (which) {
    case IntertwineKind::LambdaShifted: {
      JackContext<S> ctx(n, theta);
      p.kernel = lambda_kernel_matrix(n, theta, alpha, lmax);
      p.lhs_left = generator_matrix(kind, theta, S(alpha + one), lmax, ctx);
      p.rhs_right = generator_matrix(kind, theta, alpha, lmax, ctx);
      break;
    }
    case IntertwineKind::DixonCrossN: {
      if (lmax.length() > n)
        throw std::invalid_argument("cross-N check needs l(lmax) <= N");
      JackContext<S> top(n + 1, theta), bot(n, theta);
      p.kernel = dixon_kernel_matrix(n, theta, lmax);
      p.lhs_left = generator_matrix(kind, theta, alpha, lmax, top);
      p.rhs_right = generator_matrix(kind, theta, S(alpha + one), lmax, bot);
      break;
    }
    case IntertwineKind::ComposedFixed: {
      if (lmax.length() > n)
        throw std::invalid_argument("composed check needs l(lmax) <= N");
      JackContext<S> top(n + 1, theta), bot(n, theta);
      p.kernel = dixon_kernel_matrix(n, theta, lmax) *
                 lambda_kernel_matrix(n, theta, alpha, lmax);
      p.lhs_left = generator_matrix(kind, theta, alpha, lmax, top);
      p.rhs_right = generator_matrix(kind, theta, alpha, lmax, bot);
      break;
    }
  }
  return p;
}

}  // namespace

double check_generator_intertwine(GeneratorKind kind, IntertwineKind which,
                                  double theta, double alpha,
                                  const Partition& lmax, int n) {
  auto p = make_pair_matrices<double>(kind, which, theta, alpha, lmax, n);
  GradedMatrix<double> lhs = p.lhs_left * p.kernel;
  GradedMatrix<double> rhs = p.kernel * p.rhs_right;
  double scale = std::max(1.0, std::max(lhs.max_abs(), rhs.max_abs()));
  return (lhs - rhs).max_abs() / scale;
}

bool check_generator_intertwine_exact(GeneratorKind kind, IntertwineKind which,
                                      const Rational& theta,
                                      const Rational& alpha,
                                      const Partition& lmax, int n) {
  auto p = make_pair_matrices<Rational>(kind, which, theta, alpha, lmax, n);
  return (p.lhs_left * p.kernel - p.kernel * p.rhs_right).is_zero();
}

double check_semigroup_intertwine(GeneratorKind kind, IntertwineKind which,
                                  double theta, double alpha,
                                  const Partition& lmax, int n, double t) {
  auto p = make_pair_matrices<double>(kind, which, theta, alpha, lmax, n);
  GradedMatrix<double> lhs = expm(p.lhs_left, t) * p.kernel;
  GradedMatrix<double> rhs = p.kernel * expm(p.rhs_right, t);
  double scale = std::max(1.0, std::max(lhs.max_abs(), rhs.max_abs()));
  return (lhs - rhs).max_abs() / scale;
}

bool check_semigroup_intertwine_exact(GeneratorKind kind, IntertwineKind which,
                                      const Rational& theta,
                                      const Rational& alpha,
                                      const Partition& lmax, int n) {
  auto p = make_pair_matrices<Rational>(kind, which, theta, alpha, lmax, n);
  if (kind == GeneratorKind::Laguerre) {
    // nilpotent: the exponential itself terminates, compare it exactly
    Rational t(7, 10);
    GradedMatrix<Rational> el = expm_nilpotent(p.lhs_left, t);
    GradedMatrix<Rational> er = expm_nilpotent(p.rhs_right, t);
    return (el * p.kernel - p.kernel * er).is_zero();
  }
  // OU: e^{-t} is irrational, so verify the power chain A_top^k K = K A_bot^k
  // instead; term-by-term it implies the exponential identity
  GradedMatrix<Rational> lk = GradedMatrix<Rational>::identity(p.kernel.basis);
  GradedMatrix<Rational> rk = lk;
  int max_deg = 0;
  for (const auto& mu : p.kernel.basis) max_deg = std::max(max_deg, mu.weight());
  for (int k = 1; k <= max_deg + 2; ++k) {
    lk = p.lhs_left * lk;
    rk = rk * p.rhs_right;
    if (!(lk * p.kernel - p.kernel * rk).is_zero()) return false;
  }
  return true;
}

void sde_step(const GeneratorSpec& spec, std::vector<double>& x, double dt,
              RngStream& rng) {
  // full-truncation Euler-Maruyama; x stays sorted ascending
  constexpr double kEps = 1e-12;
  const size_t n = x.size();
  std::vector<double> next(n);
  const double sqrt_dt = std::sqrt(dt);
  for (size_t i = 0; i < n; ++i) {
    double drift = spec.theta * (spec.alpha + 1.0);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = x[i] - x[j];
      // sorted input: regularize toward the side the ordering dictates
      if (i > j)
        d = std::max(d, kEps);
      else
        d = std::min(d, -kEps);
      drift += spec.theta * 2.0 * x[i] / d;
    }
    if (spec.kind == GeneratorKind::LaguerreOU) drift -= x[i];
    double diff = std::sqrt(2.0 * std::max(x[i], 0.0));
    next[i] = x[i] + drift * dt + diff * sqrt_dt * rng.normal();
  }
  std::sort(next.begin(), next.end());
  x = std::move(next);
}

std::vector<std::vector<double>> simulate_sde(const GeneratorSpec& spec,
                                              const std::vector<double>& x0,
                                              const SdeConfig& cfg,
                                              std::uint64_t seed,
                                              int n_threads) {
  spec.validate_simulation();
  cfg.validate();
  if (static_cast<int>(x0.size()) != spec.n)
    throw std::invalid_argument("simulate_sde: |x0| != N");
  ChamberPoint(x0, ChamberFlavor::Nonnegative);  // validates ordering/sign

  const long n_steps = std::lround(cfg.t_end / cfg.step);
  if (std::abs(n_steps * cfg.step - cfg.t_end) > 1e-9 * std::max(1.0, cfg.t_end))
    throw std::invalid_argument("simulate_sde: t_end must be a multiple of step");

  std::vector<std::vector<double>> out(cfg.paths);
  if (n_threads <= 0) {
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 1;
  }
  auto worker = [&](long begin, long end) {
    for (long p = begin; p < end; ++p) {
      RngStream rng(seed, static_cast<std::uint64_t>(p));
      std::vector<double> x = x0;
      for (long s = 0; s < n_steps; ++s) sde_step(spec, x, cfg.step, rng);
      out[p] = std::move(x);
    }
  };
  if (n_threads == 1 || cfg.paths < 2 * n_threads) {
    worker(0, cfg.paths);
  } else {
    std::vector<std::thread> pool;
    long chunk = (cfg.paths + n_threads - 1) / n_threads;
    for (long b = 0; b < cfg.paths; b += chunk)
      pool.emplace_back(worker, b, std::min(b + chunk, cfg.paths));
    for (auto& th : pool) th.join();
  }
  return out;
}

std::vector<std::pair<double, std::vector<double>>> simulate_sde_path(
    const GeneratorSpec& spec, const std::vector<double>& x0, double step,
    double t_end, RngStream& rng) {
  spec.validate_simulation();
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  std::vector<std::pair<double, std::vector<double>>> path;
  std::vector<double> x = x0;
  std::sort(x.begin(), x.end());
  path.emplace_back(0.0, x);
  long n_steps = std::lround(t_end / step);
  for (long s = 1; s <= n_steps; ++s) {
    sde_step(spec, x, step, rng);
    path.emplace_back(s * step, x);
  }
  return path;
}

MomentEstimate symmetrized_moment(const std::vector<std::vector<double>>& states,
                                  const SymPoly<double>& p) {
  if (states.empty()) throw std::invalid_argument("empty ensemble");
  double sum = 0.0, sumsq = 0.0;
  for (const auto& x : states) {
    double v = eval_sympoly(p, x);
    sum += v;
    sumsq += v * v;
  }
  const double n = static_cast<double>(states.size());
  MomentEstimate m;
  m.mean = sum / n;
  double var = std::max(0.0, (sumsq - n * m.mean * m.mean) / std::max(1.0, n - 1));
  m.se = std::sqrt(var / n);
  return m;
}

}  // namespace betalag
