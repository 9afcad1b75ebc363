#include <cmath>

#include "doctest.h"
#include "wsbm/limits.hpp"

using namespace wsbm;

namespace {

VectorXd vec1(double x) { return VectorXd::Constant(1, x); }

}  // namespace

TEST_CASE("weighted radius") {
  const ExpFamilyModel fam = builtin_exponential();
  // Exponential: psi'' = 1/tau^2, tau_d = tau*d, so the radius is d^2 exactly.
  for (double tau : {0.5, 1.0, 3.0})
    for (double d : {0.0, 0.3, 1.0, 1.7})
      CHECK(radius_weighted(fam, vec1(tau), vec1(d)) == doctest::Approx(d * d).epsilon(1e-12));

  SUBCASE("quadratic in d") {
    const ExpFamilyModel nn = builtin_normal_natural();
    VectorXd tau(2);
    tau << 0.4, -0.6;
    VectorXd d(2);
    d << 0.3, 0.8;
    double base = radius_weighted(nn, tau, d);
    CHECK(radius_weighted(nn, tau, VectorXd(2.0 * d)) ==
          doctest::Approx(4.0 * base).epsilon(1e-12));
    CHECK(radius_weighted(nn, tau, VectorXd::Zero(2)) == 0.0);
  }
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(0.25).regime == Regime::Undetectable);
  CHECK(classify_regime(1.0).regime == Regime::Boundary);
  CHECK(classify_regime(1.544).regime == Regime::Detectable);
  CHECK(classify_regime(1.0 - 1e-12).regime == Regime::Boundary);
  CHECK(classify_regime(1.0 - 1e-6).regime == Regime::Undetectable);
  CHECK_THROWS_AS(classify_regime(-0.1), InputError);
}

TEST_CASE("dichotomized quantities: exponential closed form") {
  const ExpFamilyModel fam = builtin_exponential();
  DichotomyQuantities q = dichotomized_quantities(fam, vec1(1.0), std::log(2.0));
  CHECK(q.p0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q.a(0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(dichotomized_quantities(fam, vec1(1.0), 0.0), DegenerateDichotomyError);
  CHECK_THROWS_AS(dichotomized_quantities(fam, vec1(1.0), 1e6), DegenerateDichotomyError);
}

TEST_CASE("generic quadrature path reproduces the exponential closed form") {
  // same law, defined only through psi so the quadrature path is exercised
  ExpFamilyModel gen = builtin_exponential();
  gen.name = "exponential-generic";
  for (double tau : {0.5, 1.0, 2.0})
    for (double t0 : {0.2, 0.7, 1.594, 3.0}) {
      DichotomyQuantities q = dichotomized_quantities(gen, vec1(tau), t0);
      CHECK(std::abs(q.p0 - std::exp(-tau * t0)) < 1e-9);
      CHECK(std::abs(q.a(0) - t0 * std::exp(-tau * t0)) < 1e-9);
    }
}

TEST_CASE("dichotomized radius") {
  const ExpFamilyModel fam = builtin_exponential();
  for (double tau : {0.5, 1.0, 2.0})
    for (double d : {0.3, 1.0})
      for (double t0 : {0.5, 1.594}) {
        double closed = tau * tau * t0 * t0 * d * d / std::expm1(tau * t0);
        CHECK(radius_dichotomized(fam, vec1(tau), vec1(d), t0) ==
              doctest::Approx(closed).epsilon(1e-12));
      }
  CHECK(radius_dichotomized(fam, vec1(1.0), vec1(0.0), 1.0) == 0.0);
  // at the optimal threshold the radius is d^2 / 1.544
  CHECK(radius_dichotomized(fam, vec1(1.0), vec1(1.0), 1.594) ==
        doctest::Approx(1.0 / 1.544).epsilon(1e-3));
}

TEST_CASE("optimal exponential threshold") {
  auto [t1, r1] = optimal_threshold_exponential(1.0);
  CHECK(t1 == doctest::Approx(1.594).epsilon(1e-3));
  CHECK(r1 == doctest::Approx(1.544).epsilon(1e-3));
  auto [t2, r2] = optimal_threshold_exponential(2.0);
  CHECK(t2 == doctest::Approx(0.797).epsilon(1e-3));
  CHECK(r2 == doctest::Approx(r1).epsilon(1e-10));
  CHECK_THROWS_AS(optimal_threshold_exponential(0.0), InputError);
  // the attained value is the grid minimum
  for (double x = 0.1; x <= 10.0; x += 0.1)
    CHECK(std::expm1(x) / (x * x) >= r1 - 1e-9);
}

TEST_CASE("information loss") {
  const ExpFamilyModel fam = builtin_exponential();
  SUBCASE("ratio independent of d") {
    double ref = information_loss(fam, vec1(1.0), vec1(0.1), 1.0).ratio;
    for (double d : {0.5, 1.0, 2.0}) {
      double r = information_loss(fam, vec1(1.0), vec1(d), 1.0).ratio;
      CHECK(std::abs(r - ref) <= 1e-12 * std::abs(ref));
    }
    CHECK(ref == doctest::Approx(std::expm1(1.0)).epsilon(1e-12));  // (e-1)/1
  }
  SUBCASE("optimal threshold attains 1.544 and is the floor") {
    CHECK(information_loss(fam, vec1(1.0), vec1(0.7), 1.594).ratio ==
          doctest::Approx(1.544).epsilon(1e-3));
    for (double t0 : {0.2, 0.5, 1.0, 2.0, 4.0})
      CHECK(information_loss(fam, vec1(1.0), vec1(0.7), t0).ratio >= 1.544 - 1e-3);
  }
  SUBCASE("d = 0 flagged") {
    InformationLoss r = information_loss(fam, vec1(1.0), vec1(0.0), 1.0);
    CHECK(r.degenerate);
    CHECK(r.weighted_radius == 0.0);
    CHECK(std::isnan(r.ratio));
  }
}

TEST_CASE("ode residual") {
  SUBCASE("gamma shape 3 satisfies the equation") {
    const ExpFamilyModel g3 = builtin_gamma_shape3();
    for (double tau : {0.5, 1.0, 2.0})
      for (double d : {0.5, 1.0, 2.0}) {
        double td = tau * d;
        CHECK(std::abs(ode_residual(g3, vec1(tau), vec1(d))) <= 1e-10 * std::pow(td, 4));
      }
  }
  SUBCASE("exponential residual is -d^4/2") {
    const ExpFamilyModel fam = builtin_exponential();
    CHECK(ode_residual(fam, vec1(1.0), vec1(1.0)) == doctest::Approx(-0.5).epsilon(1e-10));
    for (double d : {0.4, 0.9})
      CHECK(ode_residual(fam, vec1(2.0), vec1(d)) ==
            doctest::Approx(-0.5 * std::pow(d, 4)).epsilon(1e-10));
  }
  SUBCASE("degree-4 homogeneity in d") {
    const ExpFamilyModel fam = builtin_exponential();
    double base = ode_residual(fam, vec1(1.3), vec1(0.5));
    for (double c : {2.0, 3.0})
      CHECK(ode_residual(fam, vec1(1.3), vec1(c * 0.5)) ==
            doctest::Approx(std::pow(c, 4) * base).epsilon(1e-10));
  }
  SUBCASE("d = 0") {
    CHECK(ode_residual(builtin_exponential(), vec1(1.0), vec1(0.0)) == 0.0);
  }
}

TEST_CASE("second moment limit") {
  const ExpFamilyModel fam = builtin_exponential();
  CHECK(second_moment_limit(fam, vec1(1.0), vec1(0.0)) == doctest::Approx(1.0).epsilon(1e-14));
  // exponential closed form: exp(-d^2/2 + 3 d^4/4) / sqrt(1 - d^2)
  for (double d : {0.3, 0.6, 0.9}) {
    double expect = std::exp(-0.5 * d * d + 0.75 * std::pow(d, 4)) / std::sqrt(1.0 - d * d);
    CHECK(second_moment_limit(fam, vec1(1.0), vec1(d)) == doctest::Approx(expect).epsilon(1e-12));
  }
  // divergence approaching the boundary
  double prev = 0.0;
  for (double d : {0.9, 0.99, 0.999}) {
    double v = second_moment_limit(fam, vec1(1.0), vec1(d));
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(second_moment_limit(fam, vec1(1.0), vec1(1.0)), DomainError);
}

TEST_CASE("second moment monte carlo") {
  const ExpFamilyModel fam = builtin_exponential();
  SUBCASE("d = 0 is exactly one with zero spread") {
    SecondMomentEstimate e = second_moment_mc(fam, vec1(1.0), vec1(0.0), 100, 200, 42);
    CHECK(e.estimate == 1.0);
    CHECK(e.std_error == 0.0);
  }
  SUBCASE("worker-count independence") {
    SecondMomentEstimate a = second_moment_mc(fam, vec1(1.0), vec1(0.6), 80, 4000, 7, 1);
    SecondMomentEstimate b = second_moment_mc(fam, vec1(1.0), vec1(0.6), 80, 4000, 7, 4);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
  }
  SUBCASE("agrees with the exact expectation") {
    double exact = second_moment_exact(fam, vec1(1.0), vec1(0.6), 80);
    SecondMomentEstimate e = second_moment_mc(fam, vec1(1.0), vec1(0.6), 80, 20000, 3);
    CHECK(std::abs(e.estimate - exact) < 5.0 * std::max(e.std_error, 1e-6));
  }
  SUBCASE("monotone in d") {
    double lo = second_moment_exact(fam, vec1(1.0), vec1(0.6), 200);
    double hi = second_moment_exact(fam, vec1(1.0), vec1(0.95), 200);
    CHECK(hi > lo);
  }
}

TEST_CASE("exact second moment approaches the limit monotonically") {
  const ExpFamilyModel fam = builtin_exponential();
  double lim = second_moment_limit(fam, vec1(1.0), vec1(0.6));
  double d50 = std::abs(second_moment_exact(fam, vec1(1.0), vec1(0.6), 50) - lim);
  double d100 = std::abs(second_moment_exact(fam, vec1(1.0), vec1(0.6), 100) - lim);
  double d200 = std::abs(second_moment_exact(fam, vec1(1.0), vec1(0.6), 200) - lim);
  CHECK(d100 < d50);
  CHECK(d200 < d100);
  CHECK(d200 < 0.01 * lim);
}
