#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "wsbm/errors.hpp"
#include "wsbm/math_util.hpp"

namespace wsbm {

enum class CycleSumMethod { BruteForce, Trace3, Trace4, Auto };

namespace detail {

inline void check_cycle_matrix(const Eigen::MatrixXd& b) {
  if (b.rows() != b.cols()) throw InputError("cycle_sum: matrix must be square");
  if (b.diagonal().cwiseAbs().maxCoeff() != 0.0)
    throw InputError("cycle_sum: matrix must have zero diagonal");
}

}  // namespace detail

/// Sum over all undirected k-cycles on distinct nodes of the product of edge
/// values. Each cycle is counted exactly once: the smallest node is fixed
/// first and reflections are killed by requiring the second node to precede
/// the last. O(C(n,k) * (k-1)!/2) terms; intended as an oracle for small n.
/// `term_count`, when given, receives the number of summed products.
inline double cycle_sum_bruteforce(const Eigen::MatrixXd& b, int k,
                                   std::uint64_t* term_count = nullptr) {
  detail::check_cycle_matrix(b);
  const int n = static_cast<int>(b.rows());
  if (k < 3) throw InputError("cycle_sum: k must be >= 3");
  if (k > n) throw InputError("cycle_sum: k exceeds node count");

  KahanSum total;
  std::uint64_t terms = 0;

  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;

  std::vector<int> rest(static_cast<std::size_t>(k - 1));
  for (;;) {
    // all orderings of comb[1..k-1]; reflection removed by rest.front() < rest.back()
    std::copy(comb.begin() + 1, comb.end(), rest.begin());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;
      double prod = b(comb[0], rest.front());
      for (std::size_t t = 0; t + 1 < rest.size(); ++t) prod *= b(rest[t], rest[t + 1]);
      prod *= b(rest.back(), comb[0]);
      total.add(prod);
      ++terms;
    } while (std::next_permutation(rest.begin(), rest.end()));

    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (term_count) *term_count = terms;
  return total.value();
}

/// Triangle-cycle sum via trace(B^3)/6; O(n^3).
inline double cycle_sum_trace3(const Eigen::MatrixXd& b) {
  detail::check_cycle_matrix(b);
  Eigen::MatrixXd b2 = b * b;
  return b2.cwiseProduct(b).sum() / 6.0;
}

/// 4-cycle sum via the closed-walk decomposition
/// (trace(B^4) - 2*sum_i r_i^2 + sum_{i!=j} B_ij^4) / 8, r_i = sum_j B_ij^2.
inline double cycle_sum_trace4(const Eigen::MatrixXd& b) {
  detail::check_cycle_matrix(b);
  Eigen::MatrixXd b2 = b * b;
  double tr4 = b2.squaredNorm();  // trace(B^4) = ||B^2||_F^2 for symmetric B
  Eigen::VectorXd r = b.array().square().matrix().rowwise().sum();
  double q = b.array().pow(4).sum();
  return (tr4 - 2.0 * r.squaredNorm() + q) / 8.0;
}

/// Dispatch: Auto takes the O(n^3) trace path for k in {3,4} and falls back
/// to enumeration otherwise (guarded against astronomically many terms).
inline double cycle_sum(const Eigen::MatrixXd& b, int k,
                        CycleSumMethod method = CycleSumMethod::Auto) {
  switch (method) {
    case CycleSumMethod::Trace3:
      if (k != 3) throw InputError("cycle_sum: Trace3 requires k = 3");
      return cycle_sum_trace3(b);
    case CycleSumMethod::Trace4:
      if (k != 4) throw InputError("cycle_sum: Trace4 requires k = 4");
      return cycle_sum_trace4(b);
    case CycleSumMethod::BruteForce:
      return cycle_sum_bruteforce(b, k);
    case CycleSumMethod::Auto: {
      if (k == 3) return cycle_sum_trace3(b);
      if (k == 4) return cycle_sum_trace4(b);
      double log_terms = log_choose(static_cast<double>(b.rows()), k) + log_half_cycles(k);
      if (log_terms > std::log(1e9))
        std::fprintf(stderr, "cycle_sum: warning: brute force with k=%d, n=%d exceeds 1e9 terms\n",
                     k, static_cast<int>(b.rows()));
      return cycle_sum_bruteforce(b, k);
    }
  }
  throw InputError("cycle_sum: unknown method");
}

}  // namespace wsbm
