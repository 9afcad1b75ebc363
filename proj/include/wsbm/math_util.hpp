#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "wsbm/errors.hpp"

namespace wsbm {

/// Compensated (Kahan) accumulator. m-th powers of edge weights span many
/// orders of magnitude, so plain summation loses digits.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

/// Inverse standard-normal CDF via Newton iterations on erfc, absolute error
/// well below 1e-12 on (1e-300, 1-1e-16).
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p outside (0,1)");
  // Moro-style starting point, then Newton.
  double x;
  {
    double q = p - 0.5;
    if (std::abs(q) < 0.425) {
      double r = 0.180625 - q * q;
      x = q * (2.5066282388 + 30.6647980661 * r) / (1.0 + 13.2800695993 * r);
    } else {
      double r = (q < 0.0) ? p : 1.0 - p;
      double t = std::sqrt(-2.0 * std::log(r));
      x = t - (2.515517 + 0.802853 * t + 0.010328 * t * t) /
                  (1.0 + 1.432788 * t + 0.189269 * t * t + 0.001308 * t * t * t);
      if (q < 0.0) x = -x;
    }
  }
  for (int it = 0; it < 60; ++it) {
    double err = normal_cdf(x) - p;
    double step = err / std::max(normal_pdf(x), 1e-300);
    // damp huge steps far in the tails
    step = std::clamp(step, -1.0, 1.0);
    x -= step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) break;
  }
  return x;
}

/// log C(n,k) through log-gamma; exact enough (rel. err <= 1e-12) for the
/// huge counts appearing in the cycle-statistic denominators.
inline double log_choose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// log((k-1)!/2): the number of undirected k-cycles on a fixed node set.
inline double log_half_cycles(int k) { return std::lgamma(static_cast<double>(k)) - std::log(2.0); }

/// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max(d, std::abs((i + 1) / n - f));
    d = std::max(d, std::abs(f - i / n));
  }
  return d;
}

/// Asymptotic KS p-value (Stephens' finite-n correction).
inline double ks_pvalue(double d, std::size_t n) {
  double sn = std::sqrt(static_cast<double>(n));
  double t = (sn + 0.12 + 0.11 / sn) * d;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    double term = 2.0 * std::exp(-2.0 * j * j * t * t);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

/// Golden-section minimization of a unimodal scalar function on [a,b].
inline double golden_minimize(const std::function<double(double)>& f, double a, double b,
                              double xtol = 1e-8) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

inline void gk15(const std::function<double(double)>& f, double a, double b, double& result,
                 double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  // Kronrod nodes at odd indices (and the center) are the embedded G7 nodes.
  for (int j = 0; j < 8; ++j) {
    double x = h * kKronrodNodes[j];
    double fv = (j == 7) ? f(c) : f(c - x) + f(c + x);
    resk += kKronrodWeights[j] * fv;
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * fv;
  }
  result = resk * h;
  err = std::abs((resk - resg) * h);
}

inline double adaptive_gk(const std::function<double(double)>& f, double a, double b, double tol,
                          int depth) {
  double r, e;
  gk15(f, a, b, r, e);
  if (e <= tol || depth >= 52) {
    if (depth >= 52 && e > 1e3 * tol)
      throw NumericError("quadrature: failed to converge to tolerance");
    return r;
  }
  double m = 0.5 * (a + b);
  return adaptive_gk(f, a, m, 0.5 * tol, depth + 1) + adaptive_gk(f, m, b, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod quadrature on a finite interval, absolute tolerance.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10) {
  if (!(b > a)) return 0.0;
  return detail::adaptive_gk(f, a, b, abs_tol, 0);
}

/// Monotone cubic (Fritsch-Carlson) interpolant through strictly increasing
/// (x, y) pairs. Used for the Tracy-Widom quantile table.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw InputError("MonotoneCubic: need >= 2 points");
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double h = x_[i + 1] - x_[i];
      if (!(h > 0.0)) throw InputError("MonotoneCubic: x not strictly increasing");
      d[i] = (y_[i + 1] - y_[i]) / h;
    }
    m_.resize(n);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
      m_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (d[i] == 0.0) {
        m_[i] = m_[i + 1] = 0.0;
        continue;
      }
      double a = m_[i] / d[i], b = m_[i + 1] / d[i];
      double s = a * a + b * b;
      if (s > 9.0) {
        double t = 3.0 / std::sqrt(s);
        m_[i] = t * a * d[i];
        m_[i + 1] = t * b * d[i];
      }
    }
  }

  double lo() const { return x_.front(); }
  double hi() const { return x_.back(); }

  double operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    double h = x_[i + 1] - x_[i];
    double t = (x - x_[i]) / h;
    double t2 = t * t, t3 = t2 * t;
    double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
  }

 private:
  std::vector<double> x_, y_, m_;
};

}  // namespace wsbm
