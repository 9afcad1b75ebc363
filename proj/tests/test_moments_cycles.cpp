#include <cmath>

#include "doctest.h"
#include "wsbm/cycles.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/moments.hpp"
#include "wsbm/rng.hpp"

using namespace wsbm;

namespace {

Eigen::MatrixXd random_sym(int n, std::uint64_t seed) {
  RngStream rng(seed, 0);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b(i, j) = b(j, i) = rng.normal();
  return b;
}

WeightedGraph random_graph(int n, std::uint64_t seed) { return WeightedGraph(random_sym(n, seed)); }

Eigen::MatrixXd ones_offdiag(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Ones(n, n);
  b.diagonal().setZero();
  return b;
}

}  // namespace

TEST_CASE("edge moment means on a tiny graph") {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(3, 3);
  w(0, 1) = w(1, 0) = 1.0;
  w(0, 2) = w(2, 0) = 2.0;
  w(1, 2) = w(2, 1) = 3.0;
  WeightedGraph g(w);
  Eigen::VectorXd mean = edge_moment_means(g, 2);
  CHECK(mean(0) == doctest::Approx(2.0));                  // (1+2+3)/3
  CHECK(mean(1) == doctest::Approx(14.0 / 3.0));           // (1+4+9)/3
  Eigen::MatrixXd cov = sample_covariance(g, 1);
  CHECK(cov(0, 0) == doctest::Approx(2.0 / 3.0));          // population variance of {1,2,3}
}

TEST_CASE("covariance matrix matches direct computation") {
  WeightedGraph g = random_graph(12, 31);
  const int m = 2;
  Eigen::MatrixXd cov = sample_covariance(g, m);
  CHECK(cov(0, 1) == doctest::Approx(cov(1, 0)));
  // direct two-pass computation
  double pairs = 0.5 * 12 * 11;
  Eigen::VectorXd mean = edge_moment_means(g, m);
  double c01 = 0.0;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      c01 += (g(i, j) - mean(0)) * (g(i, j) * g(i, j) - mean(1));
  CHECK(cov(0, 1) == doctest::Approx(c01 / pairs).epsilon(1e-12));
  // PSD check through the combined variance
  CHECK(cov.sum() >= 0.0);
}

TEST_CASE("centered matrices") {
  WeightedGraph g = random_graph(10, 77);
  SUBCASE("m=1 combined equals l=1 single") {
    CHECK((combined_centered_matrix(g, 1) - single_centered_matrix(g, 1)).cwiseAbs().maxCoeff() ==
          0.0);
  }
  SUBCASE("entries sum to zero and diagonal is zero") {
    for (int m : {1, 2, 3}) {
      Eigen::MatrixXd b = combined_centered_matrix(g, m);
      CHECK(b.diagonal().cwiseAbs().maxCoeff() == 0.0);
      CHECK(b.sum() == doctest::Approx(0.0).scale(1).epsilon(1e-9));
      CHECK((b - b.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("brute force cycle counts on K4") {
  Eigen::MatrixXd b = ones_offdiag(4);
  std::uint64_t terms = 0;
  CHECK(cycle_sum_bruteforce(b, 3, &terms) == doctest::Approx(4.0));
  CHECK(terms == 4);  // C(4,3) * (3-1)!/2
  CHECK(cycle_sum_bruteforce(b, 4, &terms) == doctest::Approx(3.0));
  CHECK(terms == 3);  // C(4,4) * (4-1)!/2
}

TEST_CASE("brute force term count is C(n,k)(k-1)!/2") {
  for (int n : {6, 8}) {
    Eigen::MatrixXd b = random_sym(n, 100 + n);
    for (int k = 3; k <= n; ++k) {
      std::uint64_t terms = 0;
      cycle_sum_bruteforce(b, k, &terms);
      double expect = std::round(std::exp(log_choose(n, k) + log_half_cycles(k)));
      CHECK(static_cast<double>(terms) == expect);
    }
  }
}

TEST_CASE("trace3 identities") {
  CHECK(cycle_sum_trace3(ones_offdiag(4)) == doctest::Approx(4.0));  // tr((J-I)^3)/6 = 24/6
  CHECK(cycle_sum_trace3(Eigen::MatrixXd::Zero(5, 5)) == 0.0);
  for (int n : {7, 9}) {
    Eigen::MatrixXd b = random_sym(n, 200 + n);
    double brute = cycle_sum_bruteforce(b, 3);
    CHECK(cycle_sum_trace3(b) == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("trace4 identities") {
  CHECK(cycle_sum_trace4(ones_offdiag(4)) == doctest::Approx(3.0));  // (84-72+12)/8
  CHECK(cycle_sum_trace4(Eigen::MatrixXd::Zero(5, 5)) == 0.0);
  for (int n : {8, 10}) {
    Eigen::MatrixXd b = random_sym(n, 300 + n);
    double brute = cycle_sum_bruteforce(b, 4);
    CHECK(cycle_sum_trace4(b) == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("oracle equivalence over the n = 5..10 sweep") {
  for (int n = 5; n <= 10; ++n) {
    Eigen::MatrixXd b = random_sym(n, 400 + n);
    CHECK(std::abs(cycle_sum_trace3(b) - cycle_sum_bruteforce(b, 3)) <=
          1e-9 * (1.0 + std::abs(cycle_sum_bruteforce(b, 3))));
    CHECK(std::abs(cycle_sum_trace4(b) - cycle_sum_bruteforce(b, 4)) <=
          1e-9 * (1.0 + std::abs(cycle_sum_bruteforce(b, 4))));
  }
}

TEST_CASE("dispatch") {
  Eigen::MatrixXd b = random_sym(10, 55);
  CHECK(cycle_sum(b, 3, CycleSumMethod::Auto) == cycle_sum_trace3(b));
  CHECK(cycle_sum(b, 4, CycleSumMethod::Auto) == cycle_sum_trace4(b));
  CHECK(cycle_sum(b, 5, CycleSumMethod::Auto) == cycle_sum_bruteforce(b, 5));
  CHECK_THROWS_AS(cycle_sum(b, 4, CycleSumMethod::Trace3), InputError);
  CHECK_THROWS_AS(cycle_sum(b, 3, CycleSumMethod::Trace4), InputError);
  CHECK_THROWS_AS(cycle_sum(b, 2, CycleSumMethod::BruteForce), InputError);
  CHECK_THROWS_AS(cycle_sum(b, 11, CycleSumMethod::BruteForce), InputError);
}

TEST_CASE("homogeneity and permutation invariance") {
  Eigen::MatrixXd b = random_sym(7, 61);
  const double c = 2.5;
  for (int k : {3, 4, 5}) {
    double base = cycle_sum(b, k);
    CHECK(cycle_sum(Eigen::MatrixXd(c * b), k) ==
          doctest::Approx(std::pow(c, k) * base).epsilon(1e-10));
  }
  Eigen::PermutationMatrix<Eigen::Dynamic> p(7);
  p.setIdentity();
  std::swap(p.indices()(0), p.indices()(4));
  std::swap(p.indices()(2), p.indices()(6));
  Eigen::MatrixXd pb = p * b * p.transpose();
  for (int k : {3, 4, 5})
    CHECK(cycle_sum(pb, k) == doctest::Approx(cycle_sum(b, k)).epsilon(1e-10));
}

TEST_CASE("cycle matrix validation") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(4, 4);  // nonzero diagonal
  CHECK_THROWS_AS(cycle_sum_trace3(bad), InputError);
  Eigen::MatrixXd rect = Eigen::MatrixXd::Zero(3, 4);
  CHECK_THROWS_AS(cycle_sum_bruteforce(rect, 3), InputError);
}
