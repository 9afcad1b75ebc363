#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wsbm/errors.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/math_util.hpp"

namespace wsbm {

/// Empirical moment summary of the edge weights: per-order means, the m x m
/// sample covariance of (A_ij, A_ij^2, ..., A_ij^m) and its diagonal.
/// All normalizations divide by C(n,2), not C(n,2)-1.
struct MomentSummary {
  Eigen::VectorXd means;      // order-t mean of A_ij^t, t = 1..m
  Eigen::MatrixXd cov;        // sample covariance of the moment vector
  Eigen::VectorXd variances;  // cov diagonal

  double combined_variance() const { return cov.sum(); }  // 1' S^2 1
};

/// Mean over the C(n,2) unordered pairs of g[i][j]^t for t = 1..m.
inline Eigen::VectorXd edge_moment_means(const WeightedGraph& g, int m) {
  if (m < 1) throw InputError("edge_moment_means: m must be >= 1");
  const int n = g.n();
  std::vector<KahanSum> sums(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = 1.0;
      for (int t = 0; t < m; ++t) {
        p *= g(i, j);
        sums[static_cast<std::size_t>(t)].add(p);
      }
    }
  const double pairs = 0.5 * n * (n - 1.0);
  Eigen::VectorXd out(m);
  for (int t = 0; t < m; ++t) out(t) = sums[static_cast<std::size_t>(t)].value() / pairs;
  return out;
}

/// Sample covariance of the moment vector M(A_ij) = (A_ij, ..., A_ij^m),
/// normalized by C(n,2).
inline Eigen::MatrixXd sample_covariance(const WeightedGraph& g, int m) {
  if (m < 1) throw InputError("sample_covariance: m must be >= 1");
  const int n = g.n();
  const Eigen::VectorXd mean = edge_moment_means(g, m);
  std::vector<KahanSum> acc(static_cast<std::size_t>(m * m));
  Eigen::VectorXd v(m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = 1.0;
      for (int t = 0; t < m; ++t) {
        p *= g(i, j);
        v(t) = p - mean(t);
      }
      for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) acc[static_cast<std::size_t>(a * m + b)].add(v(a) * v(b));
    }
  const double pairs = 0.5 * n * (n - 1.0);
  Eigen::MatrixXd cov(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      cov(a, b) = acc[static_cast<std::size_t>(a * m + b)].value() / pairs;
      cov(b, a) = cov(a, b);
    }
  return cov;
}

inline MomentSummary moment_summary(const WeightedGraph& g, int m) {
  MomentSummary s;
  s.means = edge_moment_means(g, m);
  s.cov = sample_covariance(g, m);
  s.variances = s.cov.diagonal();
  return s;
}

/// B_ij = sum_{t=1..m} (A_ij^t - mean_t): the centered matrix feeding the
/// mixture-cycle statistic. Zero diagonal; entries sum to zero by centering.
inline Eigen::MatrixXd combined_centered_matrix(const WeightedGraph& g, int m) {
  const int n = g.n();
  const Eigen::VectorXd mean = edge_moment_means(g, m);
  const double shift = mean.sum();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = 1.0, s = 0.0;
      for (int t = 0; t < m; ++t) {
        p *= g(i, j);
        s += p;
      }
      b(i, j) = b(j, i) = s - shift;
    }
  return b;
}

/// B_ij = A_ij^l - mean_l: the single-moment centered matrix.
inline Eigen::MatrixXd single_centered_matrix(const WeightedGraph& g, int l) {
  if (l < 1) throw InputError("single_centered_matrix: l must be >= 1");
  const int n = g.n();
  const Eigen::VectorXd mean = edge_moment_means(g, l);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double p = std::pow(g(i, j), static_cast<double>(l));
      b(i, j) = b(j, i) = p - mean(l - 1);
    }
  return b;
}

}  // namespace wsbm
