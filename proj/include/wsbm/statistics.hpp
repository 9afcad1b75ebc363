#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <string>

#include "json.hpp"
#include "wsbm/cycles.hpp"
#include "wsbm/errors.hpp"
#include "wsbm/families.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/math_util.hpp"
#include "wsbm/moments.hpp"
#include "wsbm/spectral.hpp"

namespace wsbm {

enum class TestKind {
  SLMC,             // T_n: all m moments combined
  SLC,              // T_{n,l}: single moment l
  DichotomizedSLC,  // R_n: thresholded graph
  WSLMC,            // Z_n: known-family theoretical statistic
  SpectralSingle,   // Lambda_{n,l}
  SpectralCombined  // Lambda_n (unstable; see paper's type-I remark)
};

inline std::string to_string(TestKind t) {
  switch (t) {
    case TestKind::SLMC: return "slmc";
    case TestKind::SLC: return "slc";
    case TestKind::DichotomizedSLC: return "dslc";
    case TestKind::WSLMC: return "wslmc";
    case TestKind::SpectralSingle: return "spectral";
    case TestKind::SpectralCombined: return "spectral-combined";
  }
  return "?";
}

enum class NullLaw { StdNormal, TracyWidom1 };

struct TestReport {
  TestKind kind = TestKind::SLMC;
  NullLaw null = NullLaw::StdNormal;
  double statistic = 0.0;
  double critical = 0.0;
  double p_value = 1.0;
  bool reject = false;
  double gamma = 0.05;
  int n = 0;
  int k = 3;
  std::optional<int> m;
  std::optional<int> l;
  std::optional<double> t0;

  nlohmann::json to_json() const {
    nlohmann::json j{{"test", to_string(kind)},
                     {"null", null == NullLaw::StdNormal ? "std-normal" : "tracy-widom1"},
                     {"statistic", statistic},
                     {"critical", critical},
                     {"p_value", p_value},
                     {"reject", reject},
                     {"gamma", gamma},
                     {"n", n},
                     {"k", k}};
    if (m) j["m"] = *m;
    if (l) j["l"] = *l;
    if (t0) j["t0"] = *t0;
    if (kind == TestKind::SpectralCombined) j["unstable"] = true;
    return j;
  }
};

namespace detail {

inline double cycle_denominator(int n, int k, double variance_term) {
  // sqrt( (k-1)!/2 * C(n,k) * variance_term^k ), in log domain against overflow
  double log_den = log_half_cycles(k) + log_choose(n, k) + k * std::log(variance_term);
  return std::exp(0.5 * log_den);
}

inline void check_cycle_args(int n, int k) {
  if (k < 3) throw InputError("cycle statistic: k must be >= 3");
  if (k > n) throw InputError("cycle statistic: k exceeds node count");
}

}  // namespace detail

/// T_n: cycle sum of the combined centered matrix over the normalization
/// sqrt((k-1)!/2 * C(n,k) * (1'S^2 1)^k). Standard normal under the null.
inline double slmc_statistic(const WeightedGraph& g, int m, int k,
                             CycleSumMethod method = CycleSumMethod::Auto) {
  detail::check_cycle_args(g.n(), k);
  Eigen::MatrixXd b = combined_centered_matrix(g, m);
  double s2 = sample_covariance(g, m).sum();
  double scale = b.cwiseAbs().maxCoeff();
  if (!(s2 > 1e-14 * std::max(scale * scale, 1.0)))
    throw ZeroVarianceError("slmc_statistic: constant edge weights");
  return cycle_sum(b, k, method) / detail::cycle_denominator(g.n(), k, s2);
}

/// T_{n,l}: single-moment version with variance S_l^2.
inline double slc_statistic(const WeightedGraph& g, int l, int k,
                            CycleSumMethod method = CycleSumMethod::Auto) {
  detail::check_cycle_args(g.n(), k);
  Eigen::MatrixXd b = single_centered_matrix(g, l);
  double s2 = sample_covariance(g, l)(l - 1, l - 1);
  double scale = b.cwiseAbs().maxCoeff();
  if (!(s2 > 1e-14 * std::max(scale * scale, 1.0)))
    throw ZeroVarianceError("slc_statistic: constant edge weights");
  return cycle_sum(b, k, method) / detail::cycle_denominator(g.n(), k, s2);
}

/// R_n on the dichotomized graph. p0 is the model edge probability when
/// known; otherwise the plug-in mean of the thresholded entries is used
/// (our extension for real data -- the paper defines R_n with the model p0).
inline double dichotomized_slc_statistic(const WeightedGraph& g, double t0, int k,
                                         std::optional<double> p0 = std::nullopt,
                                         CycleSumMethod method = CycleSumMethod::Auto) {
  detail::check_cycle_args(g.n(), k);
  const WeightedGraph binary = dichotomize(g, t0);
  double p = p0 ? *p0 : edge_moment_means(binary, 1)(0);
  if (!(p > 0.0 && p < 1.0))
    throw DegenerateDichotomyError("dichotomized_slc_statistic: all edges on one side of t0");
  const int n = g.n();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b(i, j) = binary(i, j) - p;
  return cycle_sum(b, k, method) / detail::cycle_denominator(n, k, p * (1.0 - p));
}

/// Z_n: the known-family statistic with edge values
/// tau_d'(T(A_ij) - grad psi(tau))/sqrt(n), normalized by
/// sqrt((1/2k) * (tau_d' D2psi(tau) tau_d)^k).
inline double wslmc_statistic(const WeightedGraph& g, const ExpFamilyModel& fam,
                              const VectorXd& tau, const VectorXd& d, int k,
                              CycleSumMethod method = CycleSumMethod::Auto) {
  detail::check_cycle_args(g.n(), k);
  fam.require_interior(tau);
  const VectorXd tau_d = componentwise_scale(tau, d);
  const double quad = tau_d.dot(fam.hessian(tau) * tau_d);
  if (!(quad > 0.0))
    throw ZeroVarianceError("wslmc_statistic: zero quadratic form tau_d' D2psi tau_d");
  const VectorXd mean = fam.grad(tau);
  const int n = g.n();
  const double root_n = std::sqrt(static_cast<double>(n));
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e(i, j) = e(j, i) = tau_d.dot(fam.suff(g(i, j)) - mean) / root_n;
  double den = std::exp(0.5 * (k * std::log(quad) - std::log(2.0 * k)));
  return cycle_sum(e, k, method) / den;
}

/// Accept/reject decision. Normal nulls are two-sided; the Tracy-Widom null
/// is one-sided upper.
inline TestReport decide(double statistic, NullLaw null, double gamma,
                         const TracyWidomTable& table = TracyWidomTable::builtin()) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw InputError("decide: gamma outside (0,1)");
  TestReport r;
  r.statistic = statistic;
  r.null = null;
  r.gamma = gamma;
  if (null == NullLaw::StdNormal) {
    r.critical = normal_quantile(1.0 - gamma / 2.0);
    r.p_value = std::erfc(std::abs(statistic) / std::sqrt(2.0));
    r.reject = std::abs(statistic) > r.critical;
  } else {
    r.critical = tw1_critical(gamma, table);
    r.p_value = 1.0 - table.cdf(statistic);
    r.reject = statistic > r.critical;
  }
  return r;
}

}  // namespace wsbm
