#include "betalag/gammafn.hpp"
#include "betalag/graded_matrix.hpp"
#include "betalag/quadrature.hpp"
#include "betalag/rng.hpp"
#include "betalag/secular.hpp"

#include "doctest.h"

#include <cmath>

using namespace betalag;

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next_u64(), y = b.next_u64(), z = c.next_u64();
    all_equal = all_equal && (x == y);
    any_diff = any_diff || (x != z);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("uniform stays inside the open interval") {
  RngStream r(1, 0);
  for (int i = 0; i < 10000; ++i) {
    double u = r.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gamma mean, small shape included") {
  for (double shape : {0.2, 1.0, 3.7}) {
    RngStream r(5, static_cast<uint64_t>(shape * 100));
    const int n = 40000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
      double g = r.gamma(shape);
      CHECK(g >= 0.0);
      sum += g;
      sumsq += g * g;
    }
    double mean = sum / n;
    double se = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::abs(mean - shape) <= 4.0 * se);
  }
}

TEST_CASE("dirichlet mean equals normalized shapes") {
  RngStream r(9, 0);
  std::vector<double> shapes{0.5, 1.0, 2.5};
  const int n = 40000;
  std::vector<double> sum(3, 0.0);
  for (int i = 0; i < n; ++i) {
    auto d = r.dirichlet(shapes);
    double tot = 0.0;
    for (int k = 0; k < 3; ++k) {
      sum[k] += d[k];
      tot += d[k];
    }
    CHECK(tot == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int k = 0; k < 3; ++k)
    CHECK(sum[k] / n == doctest::Approx(shapes[k] / 4.0).epsilon(0.03));
}

TEST_CASE("secular root examples") {
  CHECK(secular_roots({0.0, 1.0}, {1.0, 1.0})[0] ==
        doctest::Approx(0.5).epsilon(1e-12));
  for (double w : {0.1, 0.42, 0.9})
    CHECK(secular_roots({0.0, 1.0}, {w, 1.0 - w})[0] ==
          doctest::Approx(w).epsilon(1e-11));
  auto roots = secular_roots({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0});
  CHECK(roots[0] == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)).epsilon(1e-11));
  CHECK(roots[1] == doctest::Approx(1.0 + 1.0 / std::sqrt(3.0)).epsilon(1e-11));
}

TEST_CASE("secular roots interlace and respond monotonically to weights") {
  std::vector<double> poles{-1.0, 0.2, 0.9, 3.0};
  std::vector<double> w{0.4, 1.1, 0.3, 2.0};
  auto r0 = secular_roots(poles, w);
  REQUIRE(r0.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(r0[i] > poles[i]);
    CHECK(r0[i] < poles[i + 1]);
  }
  // increasing the last weight lowers every root: the added term is negative
  // left of the last pole and f is decreasing at each root
  w[3] += 0.5;
  auto r1 = secular_roots(poles, w);
  for (size_t i = 0; i < 3; ++i) CHECK(r1[i] < r0[i]);
}

TEST_CASE("jacobi rules reproduce beta function moments") {
  for (double p : {-0.5, -0.3, 0.0, 0.5, 1.5})
    for (double q : {-0.5, 0.0, 0.7, 2.0}) {
      double got = integrate_jacobi(0.0, 1.0, q, p, 24,
                                    [](double) { return 1.0; });
      double expect = std::exp(log_gamma(q + 1.0) + log_gamma(p + 1.0) -
                               log_gamma(p + q + 2.0));
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
  double inv_sqrt = integrate_jacobi(0.0, 1.0, -0.5, 0.0, 8,
                                     [](double) { return 1.0; });
  CHECK(inv_sqrt == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("jacobi rule is exact on high-degree polynomials") {
  // degree 2n-1 exactness, shifted interval
  double got = integrate_jacobi(1.0, 3.0, 0.5, -0.4, 16, [](double y) {
    return std::pow(y - 2.0, 7) + 3.0 * y * y;
  });
  double expect = integrate_jacobi(1.0, 3.0, 0.5, -0.4, 64, [](double y) {
    return std::pow(y - 2.0, 7) + 3.0 * y * y;
  });
  CHECK(got == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("logpoch and poch_int") {
  CHECK(logpoch(3.0, 2.0) == doctest::Approx(std::log(12.0)).epsilon(1e-14));
  CHECK(poch_int(3.0, 2) == doctest::Approx(12.0));
  CHECK(poch_int(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(poch_int(-2.0, 4) == 0.0);  // hits zero factor
  CHECK_THROWS(log_gamma(-3.0));
}

TEST_CASE("matrix exponential basics") {
  auto basis = enumerate_contained(Partition({2}), 1);
  GradedMatrix<double> m(basis);
  m.at(Partition({1}), Partition({2})) = 3.0;
  m.at(Partition{}, Partition({1})) = 2.0;
  CHECK(m.strictly_lowers_grading());
  GradedMatrix<double> e0 = expm(m, 0.0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      CHECK(e0.a[i][j] == (i == j ? 1.0 : 0.0));
  // nilpotent series: entry ( () , (2) ) of e^{tM} is t^2 * 3 * 2 / 2
  GradedMatrix<double> e = expm(m, 0.5);
  CHECK(e.at(Partition{}, Partition({2})) ==
        doctest::Approx(0.25 * 3.0 * 2.0 / 2.0).epsilon(1e-14));
  GradedMatrix<Rational> rm(basis);
  rm.at(Partition({1}), Partition({2})) = Rational(3);
  rm.at(Partition{}, Partition({1})) = Rational(2);
  auto re = expm_nilpotent(rm, Rational(1, 2));
  CHECK(re.at(Partition{}, Partition({2})) == Rational(3, 4));
}

TEST_CASE("gen_pochhammer matches products") {
  Partition lam({2, 1});
  // (a)_lam = (a)_2 * (a - theta)_1
  double a = 1.3, th = 0.6;
  CHECK(gen_pochhammer(a, lam, th) ==
        doctest::Approx(a * (a + 1.0) * (a - th)).epsilon(1e-14));
}
