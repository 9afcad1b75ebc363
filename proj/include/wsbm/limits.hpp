#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wsbm/errors.hpp"
#include "wsbm/families.hpp"
#include "wsbm/math_util.hpp"
#include "wsbm/rng.hpp"

namespace wsbm {

enum class Regime { Undetectable, Boundary, Detectable };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::Undetectable: return "undetectable";
    case Regime::Boundary: return "boundary";
    case Regime::Detectable: return "detectable";
  }
  return "?";
}

struct RegimeClassification {
  double radius = 0.0;
  Regime regime = Regime::Undetectable;
  double tol = 1e-9;
};

struct DichotomyQuantities {
  double p0 = 0.0;
  VectorXd a;  // a(t0)
  double t0 = 0.0;
};

/// tau_d' D2psi(tau) tau_d -- below 1 no consistent test exists, above 1 the
/// weighted cycle test is consistent.
inline double radius_weighted(const ExpFamilyModel& fam, const VectorXd& tau, const VectorXd& d) {
  const VectorXd tau_d = componentwise_scale(tau, d);
  return tau_d.dot(fam.hessian(tau) * tau_d);
}

inline RegimeClassification classify_regime(double radius, double tol = 1e-9) {
  if (radius < 0.0) throw InputError("classify_regime: negative radius");
  RegimeClassification c;
  c.radius = radius;
  c.tol = tol;
  if (radius < 1.0 - tol)
    c.regime = Regime::Undetectable;
  else if (radius > 1.0 + tol)
    c.regime = Regime::Detectable;
  else
    c.regime = Regime::Boundary;
  return c;
}

namespace detail {

/// Weight density at x under natural parameter theta.
inline double family_density(const ExpFamilyModel& fam, const VectorXd& theta, double psi,
                             double x) {
  return std::exp(fam.log_base(x) + theta.dot(fam.suff(x)) - psi);
}

/// Upper integration limit: extend until the density decays below 1e-16 of
/// the largest value seen.
inline double truncation_point(const ExpFamilyModel& fam, const VectorXd& theta, double psi,
                               double lo) {
  if (std::isfinite(fam.support_hi)) return fam.support_hi;
  double peak = family_density(fam, theta, psi, lo);
  double span = 1.0;
  double hi = lo + span;
  for (int iter = 0; iter < 80; ++iter) {
    // walk the current window for the running peak before testing decay
    for (int j = 1; j <= 8; ++j)
      peak = std::max(peak, family_density(fam, theta, psi, hi - span * j / 8.0));
    if (family_density(fam, theta, psi, hi) < 1e-16 * peak && peak > 0.0) return hi;
    span *= 2.0;
    hi += span;
  }
  throw NumericError(fam.name + ": density truncation point not found");
}

}  // namespace detail

/// Edge probability p0 = P(A_ij > t0) and the vector a(t0) = \int_{t0}
/// (Dpsi(tau) - T(x)) dF_tau(x). Closed form for the builtin exponential
/// family; adaptive quadrature otherwise.
inline DichotomyQuantities dichotomized_quantities(const ExpFamilyModel& fam, const VectorXd& tau,
                                                   double t0) {
  fam.require_interior(tau);
  DichotomyQuantities q;
  q.t0 = t0;
  if (fam.name == "exponential" && t0 >= 0.0) {
    q.p0 = std::exp(-tau(0) * t0);
    q.a = VectorXd::Constant(1, t0 * q.p0);
  } else {
    const double psi = fam.log_partition(tau);
    const double lo = std::max(t0, fam.support_lo);
    const double hi = detail::truncation_point(fam, tau, psi, lo);
    q.p0 = integrate([&](double x) { return detail::family_density(fam, tau, psi, x); }, lo, hi);
    const VectorXd mean = fam.grad(tau);
    q.a = VectorXd(fam.m);
    for (int t = 0; t < fam.m; ++t)
      q.a(t) = integrate(
          [&](double x) {
            return (mean(t) - fam.suff(x)(t)) * detail::family_density(fam, tau, psi, x);
          },
          lo, hi);
  }
  if (!(q.p0 > 1e-12 && q.p0 < 1.0 - 1e-12))
    throw DegenerateDichotomyError(fam.name + ": dichotomization at t0=" + std::to_string(t0) +
                                   " leaves p0 at " + std::to_string(q.p0));
  if (!q.a.allFinite()) throw NumericError(fam.name + ": a(t0) quadrature failed");
  return q;
}

/// (a(t0)' tau_d)^2 / (p0 (1 - p0)): the detection radius left after
/// thresholding at t0.
inline double radius_dichotomized(const ExpFamilyModel& fam, const VectorXd& tau,
                                  const VectorXd& d, double t0) {
  const DichotomyQuantities q = dichotomized_quantities(fam, tau, t0);
  const double proj = q.a.dot(componentwise_scale(tau, d));
  return proj * proj / (q.p0 * (1.0 - q.p0));
}

/// Minimizer of (e^x - 1)/x^2 over x > 0, rescaled: the threshold t0* = x*/tau
/// losing the least information, with the attained ratio (about 1.544 at
/// x* about 1.594).
inline std::pair<double, double> optimal_threshold_exponential(double tau) {
  if (!(tau > 0.0)) throw InputError("optimal_threshold_exponential: tau must be positive");
  auto f = [](double x) { return std::expm1(x) / (x * x); };
  double x_star = golden_minimize(f, 0.1, 10.0, 1e-8);
  return {x_star / tau, f(x_star)};
}

struct InformationLoss {
  double weighted_radius = 0.0;
  double dichotomized_radius = 0.0;
  double ratio = 0.0;      // weighted / dichotomized
  bool degenerate = false; // dichotomized radius vanished (d = 0 or orthogonality)
};

inline InformationLoss information_loss(const ExpFamilyModel& fam, const VectorXd& tau,
                                        const VectorXd& d, double t0) {
  InformationLoss r;
  r.weighted_radius = radius_weighted(fam, tau, d);
  r.dichotomized_radius = radius_dichotomized(fam, tau, d, t0);
  if (r.dichotomized_radius == 0.0) {
    r.degenerate = true;
    r.ratio = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.ratio = r.weighted_radius / r.dichotomized_radius;
  }
  return r;
}

namespace detail {

inline double sigma2_term(const ExpFamilyModel& fam, const VectorXd& tau, const VectorXd& tau_d) {
  // sum_{|alpha|=2} d^alpha psi / alpha! * tau_d^alpha = tau_d' D2psi tau_d / 2
  return 0.5 * tau_d.dot(fam.hessian(tau) * tau_d);
}

}  // namespace detail

/// Residual of the contiguity differential equation: (Sigma_2)^2 - 3 Sigma_4
/// with Sigma_r = sum_{|alpha|=r} d^alpha psi(tau)/alpha! * (tau_d)^alpha.
/// Zero for families satisfying the condition (e.g. Gamma with shape 3).
inline double ode_residual(const ExpFamilyModel& fam, const VectorXd& tau, const VectorXd& d) {
  const VectorXd tau_d = componentwise_scale(tau, d);
  const double s2 = detail::sigma2_term(fam, tau, tau_d);
  const double s4 = fam.quartic_form(tau, tau_d);
  return s2 * s2 - 3.0 * s4;
}

/// Closed-form limit of E[L_n^2]: exp(-Sigma_2 + 3 Sigma_4) (1 - t)^{-1/2}
/// with t the weighted detection radius. Requires t < 1.
inline double second_moment_limit(const ExpFamilyModel& fam, const VectorXd& tau,
                                  const VectorXd& d) {
  const VectorXd tau_d = componentwise_scale(tau, d);
  const double s2 = detail::sigma2_term(fam, tau, tau_d);
  const double s4 = fam.quartic_form(tau, tau_d);
  const double t = 2.0 * s2;
  if (!(t < 1.0)) throw DomainError("second_moment_limit: radius >= 1, limit diverges");
  return std::exp(-s2 + 3.0 * s4) / std::sqrt(1.0 - t);
}

namespace detail {

/// The log of one replicate of the second-moment product. With
/// s = sigma_i sigma_j and u = eta_i eta_j, a pair contributes
/// g(s,u) = psi(tau - (s+u)h) - psi(tau - s h) - psi(tau - u h) + psi(tau),
/// h = tau_d / sqrt(n), and g(+,-) == g(-,+). Pair counts follow from the
/// node category counts (a,b,c,d) over (sigma_i, eta_i) in (+,+),(+,-),
/// (-,+),(-,-): same-category pairs give (s,u)=(+,+); opposite categories
/// (ad+bc) give (-,-); the rest give mixed signs.
struct SecondMomentTerms {
  double g_pp, g_pm, g_mm;  // (s,u) = (+,+), (+,-)==(-,+), (-,-)

  SecondMomentTerms(const ExpFamilyModel& fam, const VectorXd& tau, const VectorXd& d, int n) {
    const VectorXd h = componentwise_scale(tau, d) / std::sqrt(static_cast<double>(n));
    const double psi0 = fam.log_partition(tau);
    const double psi_m = fam.log_partition(tau - h);
    const double psi_p = fam.log_partition(tau + h);
    if (!fam.in_domain(tau - 2.0 * h) || !fam.in_domain(tau + 2.0 * h))
      throw DomainError(fam.name + ": second moment perturbation leaves the domain");
    g_pp = fam.log_partition(tau - 2.0 * h) - 2.0 * psi_m + psi0;
    g_pm = 2.0 * psi0 - psi_m - psi_p;
    g_mm = fam.log_partition(tau + 2.0 * h) - 2.0 * psi_p + psi0;
  }

  double log_value(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) const {
    auto c2 = [](std::int64_t x) { return static_cast<double>(x * (x - 1) / 2); };
    double n_pp = c2(a) + c2(b) + c2(c) + c2(d);
    double n_mm = static_cast<double>(a * d + b * c);
    double n_pm = static_cast<double>(a * b + c * d + a * c + b * d);
    return n_pp * g_pp + n_pm * g_pm + n_mm * g_mm;
  }
};

}  // namespace detail

struct SecondMomentEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  int n = 0;
  int reps = 0;
};

/// Monte-Carlo E[L_n^2] over independent uniform label pairs (sigma, eta).
/// Each replicate is the exact log-domain product over all C(n,2) pairs,
/// grouped by the four (sigma_i sigma_j, eta_i eta_j) sign patterns.
/// Deterministic in (seed, rep) regardless of thread count.
inline SecondMomentEstimate second_moment_mc(const ExpFamilyModel& fam, const VectorXd& tau,
                                             const VectorXd& d, int n, int reps,
                                             std::uint64_t seed, int threads = 1) {
  if (n < 2 || n > 1000) throw InputError("second_moment_mc: n outside [2, 1000]");
  if (reps < 1) throw InputError("second_moment_mc: reps must be positive");
  fam.require_interior(tau);
  const detail::SecondMomentTerms terms(fam, tau, d, n);

  std::vector<double> values(static_cast<std::size_t>(reps));
  std::atomic<bool> overflow{false};
  auto worker = [&](int lo, int hi) {
    for (int r = lo; r < hi; ++r) {
      RngStream rng(seed, static_cast<std::uint64_t>(r));
      std::int64_t cnt[4] = {0, 0, 0, 0};
      for (int i = 0; i < n; ++i) {
        std::uint64_t bits = rng.next_u64();
        ++cnt[bits & 3];
      }
      double lv = terms.log_value(cnt[0], cnt[1], cnt[2], cnt[3]);
      if (lv > 700.0) overflow.store(true);
      values[static_cast<std::size_t>(r)] = std::exp(lv);
    }
  };
  threads = std::max(1, std::min(threads, reps));
  if (threads == 1) {
    worker(0, reps);
  } else {
    std::vector<std::thread> pool;
    int chunk = (reps + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, t * chunk, std::min(reps, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  if (overflow.load())
    throw NumericError("second_moment_mc: replicate overflow (log value > 700)");

  KahanSum sum, sumsq;
  for (double v : values) sum.add(v);
  const double mean = sum.value() / reps;
  for (double v : values) sumsq.add((v - mean) * (v - mean));
  SecondMomentEstimate out;
  out.estimate = mean;
  out.std_error = reps > 1 ? std::sqrt(sumsq.value() / (reps - 1.0) / reps) : 0.0;
  out.n = n;
  out.reps = reps;
  return out;
}

/// Exact E[L_n^2]: the replicate value depends on the labels only through the
/// multinomial category counts, so the expectation is a sum over the O(n^3)
/// compositions a+b+c+d = n weighted by multinomial(n;a,b,c,d)/4^n.
inline double second_moment_exact(const ExpFamilyModel& fam, const VectorXd& tau,
                                  const VectorXd& d, int n) {
  if (n < 2 || n > 1000) throw InputError("second_moment_exact: n outside [2, 1000]");
  fam.require_interior(tau);
  const detail::SecondMomentTerms terms(fam, tau, d, n);
  const double log_quarter = -std::log(4.0);
  KahanSum total;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c) {
        int e = n - a - b - c;
        double log_coef = std::lgamma(n + 1.0) - std::lgamma(a + 1.0) - std::lgamma(b + 1.0) -
                          std::lgamma(c + 1.0) - std::lgamma(e + 1.0) + n * log_quarter;
        total.add(std::exp(log_coef + terms.log_value(a, b, c, e)));
      }
  return total.value();
}

}  // namespace wsbm
