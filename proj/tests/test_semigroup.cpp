#include "betalag/semigroup.hpp"
#include "betalag/stats.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace betalag;

TEST_CASE("generator entries") {
  // A P_(1) = theta N (N + alpha) P_() : N=2, theta=1, alpha=0 -> 4
  GeneratorSpec s{GeneratorKind::Laguerre, 1.0, 0.0, 2};
  auto m = generator_matrix(s, Partition({1}));
  CHECK(m.at(Partition{}, Partition({1})) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(m.at(Partition({1}), Partition({1})) == 0.0);
  CHECK(m.strictly_lowers_grading());

  GeneratorSpec ou{GeneratorKind::LaguerreOU, 1.3, 0.4, 2};
  auto mo = generator_matrix(ou, Partition({2}));
  CHECK(mo.at(Partition({2}), Partition({2})) ==
        doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(mo.at(Partition({1}), Partition({1})) ==
        doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("laguerre generator is nilpotent") {
  GeneratorSpec s{GeneratorKind::Laguerre, 0.7, 1.1, 3};
  Partition lmax({2, 1});
  auto m = generator_matrix(s, lmax);
  auto p = m;
  // weight of lmax is 3, so A^4 = 0
  for (int k = 0; k < 3; ++k) p = p * m;
  CHECK(p.max_abs() == 0.0);
}

TEST_CASE("semigroup matrix basics") {
  GeneratorSpec s{GeneratorKind::Laguerre, 1.0, 0.0, 2};
  Partition lmax({1});
  auto id = semigroup_matrix(s, lmax, 0.0);
  CHECK(id.at(Partition{}, Partition{}) == doctest::Approx(1.0));
  CHECK(id.at(Partition{}, Partition({1})) == doctest::Approx(0.0));
  double t = 0.37;
  auto e = semigroup_matrix(s, lmax, t);
  CHECK(e.at(Partition{}, Partition({1})) ==
        doctest::Approx(4.0 * t).epsilon(1e-13));

  GeneratorSpec ou{GeneratorKind::LaguerreOU, 1.0, 0.0, 1};
  auto eo = semigroup_matrix(ou, Partition({1}), t);
  CHECK(eo.at(Partition({1}), Partition({1})) ==
        doctest::Approx(std::exp(-t)).epsilon(1e-12));
}

TEST_CASE("semigroup property T(t+s) = T(t) T(s)") {
  for (GeneratorKind k : {GeneratorKind::Laguerre, GeneratorKind::LaguerreOU}) {
    GeneratorSpec s{k, 1.4, 0.3, 2};
    Partition lmax({2, 1});
    for (double t : {0.1, 0.7})
      for (double u : {0.1, 0.7}) {
        auto lhs = semigroup_matrix(s, lmax, t + u);
        auto rhs = semigroup_matrix(s, lmax, t) * semigroup_matrix(s, lmax, u);
        CHECK((lhs - rhs).max_abs() <= 1e-12);
      }
  }
}

TEST_CASE("generator intertwining residuals") {
  // trivial basis: lmax = () -> residual identically 0
  CHECK(check_generator_intertwine(GeneratorKind::Laguerre,
                                   IntertwineKind::LambdaShifted, 1.0, 0.0,
                                   Partition{}, 2) == 0.0);
  for (IntertwineKind which :
       {IntertwineKind::LambdaShifted, IntertwineKind::DixonCrossN,
        IntertwineKind::ComposedFixed}) {
    for (double theta : {0.6, 1.0, 2.1})
      for (double alpha : {-0.4, 0.0, 1.5}) {
        CHECK(check_generator_intertwine(GeneratorKind::Laguerre, which, theta,
                                         alpha, Partition({2, 1}), 2) <= 1e-10);
        if (which == IntertwineKind::LambdaShifted)
          CHECK(check_generator_intertwine(GeneratorKind::LaguerreOU, which,
                                           theta, alpha, Partition({2, 1}),
                                           2) <= 1e-10);
      }
  }
}

TEST_CASE("generator intertwining is exact in rational arithmetic") {
  Rational th(5, 7), al(1, 3);
  for (IntertwineKind which :
       {IntertwineKind::LambdaShifted, IntertwineKind::DixonCrossN,
        IntertwineKind::ComposedFixed})
    CHECK(check_generator_intertwine_exact(GeneratorKind::Laguerre, which, th,
                                           al, Partition({2, 1}), 2));
  CHECK(check_generator_intertwine_exact(GeneratorKind::LaguerreOU,
                                         IntertwineKind::LambdaShifted, th, al,
                                         Partition({2, 1}), 2));
}

TEST_CASE("semigroup intertwining residuals and exact power chain") {
  for (double t : {0.0, 0.3, 1.0})
    CHECK(check_semigroup_intertwine(GeneratorKind::Laguerre,
                                     IntertwineKind::LambdaShifted, 1.2, 0.5,
                                     Partition({2, 1}), 2, t) <= 1e-10);
  CHECK(check_semigroup_intertwine(GeneratorKind::LaguerreOU,
                                   IntertwineKind::LambdaShifted, 0.8, -0.2,
                                   Partition({3}), 2, 0.6) <= 1e-10);
  Rational th(3, 4), al(2, 5);
  CHECK(check_semigroup_intertwine_exact(GeneratorKind::Laguerre,
                                         IntertwineKind::LambdaShifted, th, al,
                                         Partition({2, 1}), 2));
  CHECK(check_semigroup_intertwine_exact(GeneratorKind::LaguerreOU,
                                         IntertwineKind::LambdaShifted, th, al,
                                         Partition({2}), 2));
}

TEST_CASE("sde validation") {
  GeneratorSpec bad{GeneratorKind::Laguerre, 0.3, 0.0, 1};
  CHECK_THROWS(bad.validate_simulation());
  SdeConfig c{0.0, 1.0, 10};
  CHECK_THROWS(c.validate());
  GeneratorSpec ok{GeneratorKind::Laguerre, 1.0, 0.0, 2};
  CHECK_THROWS(simulate_sde(ok, {1.0, 0.5}, SdeConfig{1e-3, 0.1, 4}, 1));
  CHECK_THROWS(simulate_sde(ok, {-0.2, 0.5}, SdeConfig{1e-3, 0.1, 4}, 1));
}

TEST_CASE("sde N=1 mean matches E[X_t] = x0 + theta(1+alpha)t") {
  GeneratorSpec s{GeneratorKind::Laguerre, 1.0, 0.5, 1};
  SdeConfig cfg{1e-3, 0.4, 20000};
  auto states = simulate_sde(s, {0.7}, cfg, 99);
  SymPoly<double> p1;
  p1.n_vars = 1;
  p1.add(Partition({1}), 1.0);
  auto m = symmetrized_moment(states, p1);
  double want = 0.7 + 1.0 * 1.5 * 0.4;
  CHECK(std::abs(m.mean - want) <= 4.0 * m.se + 5e-3);
}

TEST_CASE("sde results are deterministic and thread-count independent") {
  GeneratorSpec s{GeneratorKind::Laguerre, 1.0, 0.2, 2};
  SdeConfig cfg{1e-2, 0.1, 64};
  auto a = simulate_sde(s, {0.4, 1.1}, cfg, 7, 1);
  auto b = simulate_sde(s, {0.4, 1.1}, cfg, 7, 2);
  auto c = simulate_sde(s, {0.4, 1.1}, cfg, 7, 4);
  REQUIRE(a.size() == 64);
  CHECK(a == b);
  CHECK(a == c);
  for (const auto& st : a) {
    CHECK(st[0] <= st[1]);
    CHECK(st[0] >= 0.0);
  }
}

TEST_CASE("symmetrized_moment trivial cases") {
  SymPoly<double> one;
  one.n_vars = 2;
  one.add(Partition{}, 1.0);
  std::vector<std::vector<double>> states{{0.1, 0.9}, {0.4, 2.0}};
  auto m = symmetrized_moment(states, one);
  CHECK(m.mean == doctest::Approx(1.0));
  CHECK(m.se == doctest::Approx(0.0));
  SymPoly<double> p1;
  p1.n_vars = 2;
  p1.add(Partition({1}), 1.0);
  auto m1 = symmetrized_moment(states, p1);
  CHECK(m1.mean == doctest::Approx((1.0 + 2.4) / 2.0));
}
