#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wsbm/errors.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/math_util.hpp"
#include "wsbm/moments.hpp"
#include "wsbm/tw1_data.hpp"

namespace wsbm {

/// Tabulated beta=1 Tracy-Widom law with monotone-cubic interpolation in both
/// directions (probability -> quantile and quantile -> probability).
class TracyWidomTable {
 public:
  TracyWidomTable(std::vector<double> probs, std::vector<double> quants)
      : p_lo_(probs.front()), p_hi_(probs.back()),
        quantile_(probs, quants), cdf_(std::move(quants), std::move(probs)) {}

  static const TracyWidomTable& builtin() {
    static const TracyWidomTable table = [] {
      std::vector<double> p, q;
      for (std::size_t i = 0; i < detail::kTw1TableSize; ++i) {
        p.push_back(detail::kTw1Table[i].p);
        q.push_back(detail::kTw1Table[i].q);
      }
      return TracyWidomTable(std::move(p), std::move(q));
    }();
    return table;
  }

  /// Load a `p q` per line table (# comments allowed).
  static TracyWidomTable from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("TracyWidomTable: cannot open " + path);
    std::vector<double> p, q;
    std::string line;
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      std::istringstream ls(line);
      double pv, qv;
      if (!(ls >> pv >> qv)) throw InputError("TracyWidomTable: malformed line in " + path);
      p.push_back(pv);
      q.push_back(qv);
    }
    if (p.size() < 2) throw InputError("TracyWidomTable: too few rows in " + path);
    return TracyWidomTable(std::move(p), std::move(q));
  }

  double quantile(double p) const {
    if (!(p > p_lo_ && p < p_hi_))
      throw DomainError("TracyWidomTable: probability outside tabulated range");
    return quantile_(p);
  }

  /// CDF by inverse interpolation, clamped to the tabulated tails.
  double cdf(double x) const {
    if (x <= cdf_.lo()) return p_lo_;
    if (x >= cdf_.hi()) return p_hi_;
    return cdf_(x);
  }

 private:
  double p_lo_, p_hi_;
  MonotoneCubic quantile_;
  MonotoneCubic cdf_;
};

/// Upper-gamma critical value of the TW1 law.
inline double tw1_critical(double gamma, const TracyWidomTable& table = TracyWidomTable::builtin()) {
  if (!(gamma > 0.001 && gamma <= 0.5))
    throw DomainError("tw1_critical: gamma outside (0.001, 0.5]");
  return table.quantile(1.0 - gamma);
}

/// Largest eigenvalue of a dense symmetric matrix (full tridiagonalization).
inline double largest_eigenvalue(const Eigen::MatrixXd& m, double /*tol*/ = 1e-10) {
  double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw InputError("largest_eigenvalue: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("largest_eigenvalue: eigensolver failed");
  return solver.eigenvalues().maxCoeff();
}

namespace detail {

inline void check_variance(double s2, double scale, const char* what) {
  if (!(s2 > 1e-14 * std::max(scale, 1.0)))
    throw ZeroVarianceError(std::string(what) + ": zero edge-weight variance");
}

}  // namespace detail

/// Lambda_{n,l} = n^{2/3} (lambda_max(M) - 2) with
/// M_ij = (A_ij^l - mean_l) / (sqrt(n) * S_l) off-diagonal, 0 on the diagonal.
/// The paper's matrix expression leaves the diagonal unspecified; keeping it
/// at zero matches the zero-diagonal model for A.
inline double spectral_statistic(const WeightedGraph& g, int l) {
  const int n = g.n();
  Eigen::MatrixXd b = single_centered_matrix(g, l);
  // S_l^2 as the (l,l) entry of the moment covariance, so that the m = 1
  // combined statistic reduces to this one bit-identically.
  double s2 = sample_covariance(g, l)(l - 1, l - 1);
  detail::check_variance(s2, b.cwiseAbs().maxCoeff(), "spectral_statistic");
  b /= std::sqrt(static_cast<double>(n) * s2);
  return std::pow(static_cast<double>(n), 2.0 / 3.0) * (largest_eigenvalue(b) - 2.0);
}

/// Lambda_n: same with M_ij = sum_t (A_ij^t - mean_t), scaled by
/// 1/sqrt(n * 1'S^2 1). Reported by the paper as unstable (large type I
/// error); callers should flag it in output.
inline double combined_spectral_statistic(const WeightedGraph& g, int m) {
  const int n = g.n();
  Eigen::MatrixXd b = combined_centered_matrix(g, m);
  double s2 = sample_covariance(g, m).sum();
  detail::check_variance(s2, b.cwiseAbs().maxCoeff(), "combined_spectral_statistic");
  b /= std::sqrt(static_cast<double>(n) * s2);
  return std::pow(static_cast<double>(n), 2.0 / 3.0) * (largest_eigenvalue(b) - 2.0);
}

}  // namespace wsbm
