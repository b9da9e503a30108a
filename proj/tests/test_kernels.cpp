#include "betalag/kernels.hpp"
#include "betalag/stats.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace betalag;

TEST_CASE("c eigenvalue examples") {
  CHECK(c_eigenvalue(Partition({1}), 1, 1.0, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c_eigenvalue(Partition({1}), 2, 1.0, 0.0) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(c_eigenvalue(Partition{}, 3, 0.7, 1.3) == 1.0);
  CHECK(c_eigenvalue_rational(Partition({2, 1}), 2, Rational(1), Rational(0)) ==
        Rational(2 * 3, 3 * 4) * Rational(1, 2));
  // adding a full column of height N shifts alpha: c(lam + m*1_N; alpha)
  // equals c(lam; alpha + m/theta) up to the exact poch ratio identity
  Rational th(3, 2), al(1, 3);
  Partition lam({2, 1});
  Partition shifted({4, 3, 2});  // lam + 2*1_3 with lam padded to length 3
  Rational lhs = c_eigenvalue_rational(shifted, 3, th, al);
  // direct product check against the defining formula
  Rational prod(1);
  for (int i = 1; i <= 3; ++i) {
    Rational a = (Rational(3) + al + Rational(1 - i)) * th;
    Rational b = (Rational(3) + al + Rational(2 - i)) * th;
    int li = shifted.part(i - 1);
    prod *= poch_int(a, li) / poch_int(b, li);
  }
  CHECK(lhs == prod);
}

TEST_CASE("dixon-anderson sampler basics") {
  RngStream rng(11, 0);
  // N=1, theta arbitrary: y ~ Beta(theta, theta) scaled to [x1, x2];
  // E[P_(1)(y)] = c((1),1,theta,0) * (x1 + x2) ... check via theta=1: mean 1/2
  const int n = 60000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    auto y = sample_dixon_anderson({0.0, 1.0}, 1.0, rng);
    REQUIRE(y.size() == 1);
    CHECK(y[0] >= 0.0);
    CHECK(y[0] <= 1.0);
    sum += y[0];
  }
  CHECK(std::abs(sum / n - 0.5) <= 4.0 / std::sqrt(12.0 * n));

  // tied poles collapse: x = (a, a) forces y = a
  auto y = sample_dixon_anderson({0.7, 0.7}, 1.3, rng);
  CHECK(y[0] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("dixon-anderson N=2 eigenrelation mean (exact value 2)") {
  // x=(0,1,2), theta=1: E[y1+y2] = c((1),2,1,0) * (0+1+2) = (2/3)*3 = 2
  RngStream rng(13, 0);
  const int n = 100000;
  std::vector<double> s;
  s.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto y = sample_dixon_anderson({0.0, 1.0, 2.0}, 1.0, rng);
    REQUIRE(y.size() == 2);
    CHECK(y[0] >= 0.0);
    CHECK(y[0] <= 1.0);
    CHECK(y[1] >= 1.0);
    CHECK(y[1] <= 2.0);
    s.push_back(y[0] + y[1]);
  }
  auto m = mean_se(s);
  CHECK(std::abs(m.mean - 2.0) <= 4.0 * m.se);
}

TEST_CASE("lambda sampler basics") {
  KernelParams p{1.0, 0.0, 1};
  RngStream rng(17, 0);
  // N=1: y/x ~ Beta((alpha+1)theta, theta); theta=1, alpha=0 -> mean 1/2
  const int n = 60000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    auto y = sample_lambda({2.0}, p, rng);
    REQUIRE(y.size() == 1);
    CHECK(y[0] >= 0.0);
    CHECK(y[0] <= 2.0);
    sum += y[0];
  }
  CHECK(std::abs(sum / n - 1.0) <= 4.0 * 2.0 / std::sqrt(12.0 * n));

  // alpha=1: mean fraction (alpha+1)/(alpha+2) = 2/3
  KernelParams p1{1.0, 1.0, 1};
  sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample_lambda({1.0}, p1, rng)[0];
  CHECK(sum / n == doctest::Approx(2.0 / 3.0).epsilon(0.01));

  // zero vector maps to zero
  KernelParams p2{0.8, 0.5, 2};
  auto y = sample_lambda({0.0, 0.0}, p2, rng);
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 0.0);
}

TEST_CASE("lambda sampler interlaces and scales equivariantly") {
  KernelParams p{1.4, 0.7, 3};
  RngStream a(23, 5), b(23, 5);
  std::vector<double> x{0.4, 1.1, 2.6};
  std::vector<double> x2{0.8, 2.2, 5.2};
  for (int i = 0; i < 500; ++i) {
    auto y = sample_lambda(x, p, a);
    auto y2 = sample_lambda(x2, p, b);
    double prev = 0.0;
    for (int k = 0; k < 3; ++k) {
      CHECK(y[k] >= prev);
      CHECK(y[k] <= x[k]);
      prev = x[k];
      // same stream, doubled input -> doubled output
      CHECK(y2[k] == doctest::Approx(2.0 * y[k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("composed sampler: N+1 -> N, mean checks") {
  // N=1 from x in W^2: E[y] = c((1),1,theta,alpha) * (x1+x2)
  KernelParams p{1.0, 0.0, 1};
  RngStream rng(29, 0);
  const int n = 80000;
  std::vector<double> s;
  s.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto y = sample_composed({0.0, 1.0}, p, rng);
    REQUIRE(y.size() == 1);
    s.push_back(y[0]);
  }
  auto m = mean_se(s);
  // c((1),1,1,0) = theta/(2theta) = 1/2 applied twice: L then Lambda -> 1/4
  CHECK(std::abs(m.mean - 0.25) <= 4.0 * m.se);
}

TEST_CASE("density values and domain rejection") {
  // N=1, theta=1, alpha=0 Dixon: uniform density on [x1,x2]
  CHECK(density_dixon_anderson({0.0, 2.0}, {0.7}, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(density_dixon_anderson({0.0, 2.0}, {2.5}, 1.0) == 0.0);
  CHECK(density_lambda({1.0}, {0.4}, KernelParams{1.0, 0.0, 1}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(density_lambda({1.0}, {1.4}, KernelParams{1.0, 0.0, 1}) == 0.0);
  CHECK_THROWS(log_density_dixon_anderson({0.0, 1.0}, {0.5}, 0.3));
  CHECK_THROWS(log_density_dixon_anderson({1.0, 1.0}, {1.0}, 1.0));
  CHECK_THROWS(log_density_lambda({0.0}, {0.0}, KernelParams{1.0, 0.0, 1}));
}

TEST_CASE("density integrates to one") {
  for (double theta : {0.5, 1.0, 1.7, 2.5}) {
    CHECK(density_mass_quadrature({0.3, 1.9}, KernelParams{theta, 0.0, 1},
                                  KernelKind::DixonAnderson) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(density_mass_quadrature({-0.4, 0.8, 2.1}, KernelParams{theta, 0.0, 2},
                                  KernelKind::DixonAnderson) ==
          doctest::Approx(1.0).epsilon(1e-8));
    for (double alpha : {-0.5, 0.0, 1.3}) {
      CHECK(density_mass_quadrature({1.7}, KernelParams{theta, alpha, 1},
                                    KernelKind::Lambda) ==
            doctest::Approx(1.0).epsilon(1e-9));
      CHECK(density_mass_quadrature({0.6, 2.4}, KernelParams{theta, alpha, 2},
                                    KernelKind::Lambda) ==
            doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigen check quadrature examples") {
  // empty partition: both sides are 1 (mass) resp. P=1
  auto r = eigen_check_quadrature(Partition{}, {0.2, 1.4},
                                  KernelParams{0.9, 0.0, 1},
                                  KernelKind::DixonAnderson);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
  // the spec's worked value for x=(0,1,2), theta=1 is wrong; the density
  // gives E[y1+y2] = 2, matching c((1),2,1,0)*3
  auto r2 = eigen_check_quadrature(Partition({1}), {0.0, 1.0, 2.0},
                                   KernelParams{1.0, 0.0, 2},
                                   KernelKind::DixonAnderson);
  CHECK(r2.rhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r2.lhs == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("kernel cdf of lowest coordinate") {
  KernelParams p{1.0, 0.0, 1};
  // Dixon N=1 theta=1 on [0,1]: uniform, cdf(t) = t
  for (double t : {0.0, 0.25, 0.6, 1.0})
    CHECK(kernel_cdf_y1({0.0, 1.0}, p, KernelKind::DixonAnderson, t) ==
          doctest::Approx(t).epsilon(1e-9));
  // monotone in t, endpoints 0 and 1, N=2
  KernelParams p2{1.3, 0.6, 2};
  std::vector<double> x{0.5, 2.0};
  double prev = 0.0;
  for (double t = 0.0; t <= 0.5 + 1e-9; t += 0.05) {
    double c = kernel_cdf_y1(x, p2, KernelKind::Lambda, t);
    CHECK(c >= prev - 1e-10);
    prev = c;
  }
  CHECK(kernel_cdf_y1(x, p2, KernelKind::Lambda, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("sampler matches density: one-sample KS on y1") {
  const int draws = 100000;
  for (double theta : {0.5, 1.0, 2.5}) {
    // Dixon N=1
    {
      std::vector<double> x{0.3, 1.7};
      KernelParams p{theta, 0.0, 1};
      RngStream rng(31, static_cast<uint64_t>(theta * 10));
      std::vector<double> s;
      s.reserve(draws);
      for (int i = 0; i < draws; ++i)
        s.push_back(sample_dixon_anderson(x, theta, rng)[0]);
      double d = ks_one_sample(s, [&](double t) {
        return kernel_cdf_y1(x, p, KernelKind::DixonAnderson, t);
      });
      CHECK(d <= ks_critical_one_sample(draws));
    }
    for (double alpha : {-0.5, 0.0, 1.3}) {
      // Lambda N=1, direct cdf
      std::vector<double> x{1.2};
      KernelParams p{theta, alpha, 1};
      RngStream rng(37, static_cast<uint64_t>(theta * 100 + alpha * 10 + 7));
      std::vector<double> s;
      s.reserve(draws);
      for (int i = 0; i < draws; ++i) s.push_back(sample_lambda(x, p, rng)[0]);
      double d = ks_one_sample(s, [&](double t) {
        return kernel_cdf_y1(x, p, KernelKind::Lambda, t);
      });
      CHECK(d <= ks_critical_one_sample(draws));
    }
  }
}

TEST_CASE("sampler matches density at N=2 via interpolated cdf grid") {
  const int draws = 100000;
  std::vector<double> x{0.4, 1.9};
  KernelParams p{1.0, 0.6, 2};
  // precompute the y1-cdf on a cosine-spaced grid, interpolate linearly
  const int g = 257;
  std::vector<double> ts(g), cs(g);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < g; ++i) {
    ts[i] = x[0] * 0.5 * (1.0 - std::cos(pi * i / (g - 1)));
    cs[i] = kernel_cdf_y1(x, p, KernelKind::Lambda, ts[i]);
  }
  auto cdf = [&](double t) {
    if (t <= ts.front()) return 0.0;
    if (t >= ts.back()) return 1.0;
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    size_t j = static_cast<size_t>(it - ts.begin());
    double w = (t - ts[j - 1]) / (ts[j] - ts[j - 1]);
    return cs[j - 1] + w * (cs[j] - cs[j - 1]);
  };
  RngStream rng(41, 0);
  std::vector<double> s;
  s.reserve(draws);
  for (int i = 0; i < draws; ++i) s.push_back(sample_lambda(x, p, rng)[0]);
  // allow slack for interpolation error on top of the KS critical value
  CHECK(ks_one_sample(s, cdf) <= ks_critical_one_sample(draws) + 2e-3);
}

TEST_CASE("params validate") {
  CHECK_THROWS(KernelParams{-1.0, 0.0, 1}.validate());
  CHECK_THROWS(KernelParams{1.0, -1.5, 1}.validate());
  CHECK_THROWS(KernelParams{1.0, 0.0, 0}.validate());
  CHECK_NOTHROW(KernelParams{0.5, -0.5, 2}.validate());
}
