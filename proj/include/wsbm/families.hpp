#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "wsbm/errors.hpp"
#include "wsbm/rng.hpp"

namespace wsbm {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// A finite-dimensional exponential family h(x) exp(theta' T(x) - psi(theta)).
/// Gradient/Hessian/quartic evaluators may be omitted; numeric differentiation
/// of log_partition fills the gaps.
struct ExpFamilyModel {
  std::string name;
  int m = 1;

  std::function<VectorXd(double)> suff;                    // T(x)
  std::function<double(const VectorXd&)> log_partition;    // psi(theta)
  std::function<bool(const VectorXd&)> in_domain;
  std::function<double(const VectorXd&, RngStream&)> sample;

  // For the generic quadrature path: density = exp(log_base(x) + theta'T(x) - psi).
  std::function<double(double)> log_base;
  double support_lo = -std::numeric_limits<double>::infinity();
  double support_hi = std::numeric_limits<double>::infinity();

  // Optional analytic derivatives of psi.
  std::function<VectorXd(const VectorXd&)> grad_analytic;
  std::function<MatrixXd(const VectorXd&)> hessian_analytic;
  // sum over |alpha|=4 of d^alpha psi / alpha! * v^alpha
  std::function<double(const VectorXd&, const VectorXd&)> quartic_form_analytic;

  void require_interior(const VectorXd& theta) const {
    if (!in_domain(theta))
      throw DomainError(name + ": parameter outside the natural-parameter domain");
  }

  VectorXd grad(const VectorXd& theta) const {
    require_interior(theta);
    if (grad_analytic) return grad_analytic(theta);
    return grad_fd(theta);
  }

  MatrixXd hessian(const VectorXd& theta) const {
    require_interior(theta);
    if (hessian_analytic) return hessian_analytic(theta);
    return hessian_fd(theta);
  }

  double quartic_form(const VectorXd& theta, const VectorXd& v) const {
    require_interior(theta);
    if (quartic_form_analytic) return quartic_form_analytic(theta, v);
    return quartic_form_fd(theta, v);
  }

  VectorXd grad_fd(const VectorXd& theta, double step = 1e-4) const {
    VectorXd g(m);
    for (int i = 0; i < m; ++i) {
      double h = step * std::max(1.0, std::abs(theta(i)));
      VectorXd tp = theta, tm = theta;
      tp(i) += h;
      tm(i) -= h;
      g(i) = (log_partition(tp) - log_partition(tm)) / (2.0 * h);
    }
    return g;
  }

  MatrixXd hessian_fd(const VectorXd& theta, double step = 1e-4) const {
    MatrixXd hmat(m, m);
    const double p0 = log_partition(theta);
    for (int i = 0; i < m; ++i) {
      double hi = step * std::max(1.0, std::abs(theta(i)));
      for (int j = i; j < m; ++j) {
        double hj = step * std::max(1.0, std::abs(theta(j)));
        if (i == j) {
          VectorXd tp = theta, tm = theta;
          tp(i) += hi;
          tm(i) -= hi;
          hmat(i, i) = (log_partition(tp) - 2.0 * p0 + log_partition(tm)) / (hi * hi);
        } else {
          VectorXd tpp = theta, tpm = theta, tmp = theta, tmm = theta;
          tpp(i) += hi; tpp(j) += hj;
          tpm(i) += hi; tpm(j) -= hj;
          tmp(i) -= hi; tmp(j) += hj;
          tmm(i) -= hi; tmm(j) -= hj;
          hmat(i, j) = hmat(j, i) = (log_partition(tpp) - log_partition(tpm) -
                                     log_partition(tmp) + log_partition(tmm)) /
                                    (4.0 * hi * hj);
        }
      }
    }
    return hmat;
  }

  /// Directional 4th derivative of psi along v, divided by 4! -- equals
  /// sum_{|alpha|=4} d^alpha psi / alpha! * v^alpha by the multinomial theorem.
  /// Central 5-point stencil with Richardson extrapolation over two step
  /// sizes; raw 4th-order stencils lose ~8 digits.
  double quartic_form_fd(const VectorXd& theta, const VectorXd& v) const {
    double scale = std::max(1.0, theta.norm());
    auto stencil = [&](double h) {
      auto p = [&](double s) { return log_partition(theta + (s * h) * v); };
      return (p(2) - 4.0 * p(1) + 6.0 * p(0) - 4.0 * p(-1) + p(-2)) / (h * h * h * h);
    };
    double h = 1e-2 * scale / std::max(1.0, v.norm());
    double d1 = stencil(h);
    double d2 = stencil(h / 2.0);
    // the central 5-point stencil has an O(h^2) leading error term
    return (4.0 * d2 - d1) / 3.0 / 24.0;
  }
};

/// theta1 and theta2 for the within/between-community weight distributions,
/// each componentwise tau_t * (1 -/+ d_t / sqrt(n)).
struct PerturbedPair {
  VectorXd theta1;
  VectorXd theta2;
};

inline VectorXd componentwise_scale(const VectorXd& tau, const VectorXd& d) {
  return tau.cwiseProduct(d);  // tau_d
}

inline PerturbedPair make_perturbed_params(const ExpFamilyModel& fam, const VectorXd& tau,
                                           const VectorXd& d, int n) {
  if (tau.size() != fam.m || d.size() != fam.m)
    throw InputError("make_perturbed_params: dimension mismatch");
  const VectorXd shift = componentwise_scale(tau, d) / std::sqrt(static_cast<double>(n));
  PerturbedPair p{tau - shift, tau + shift};
  if (!fam.in_domain(p.theta1) || !fam.in_domain(p.theta2))
    throw DomainError(fam.name + ": perturbed parameter outside domain");
  return p;
}

/// Exponential(rate theta): T(x) = -x, psi = -log(theta), mean 1/theta.
inline ExpFamilyModel builtin_exponential() {
  ExpFamilyModel f;
  f.name = "exponential";
  f.m = 1;
  f.suff = [](double x) { return VectorXd::Constant(1, -x); };
  f.log_partition = [](const VectorXd& t) { return -std::log(t(0)); };
  f.in_domain = [](const VectorXd& t) { return t(0) > 0.0; };
  f.sample = [](const VectorXd& t, RngStream& rng) { return rng.exponential(t(0)); };
  f.log_base = [](double) { return 0.0; };
  f.support_lo = 0.0;
  f.grad_analytic = [](const VectorXd& t) { return VectorXd::Constant(1, -1.0 / t(0)); };
  f.hessian_analytic = [](const VectorXd& t) {
    return MatrixXd::Constant(1, 1, 1.0 / (t(0) * t(0)));
  };
  f.quartic_form_analytic = [](const VectorXd& t, const VectorXd& v) {
    double t4 = t(0) * t(0) * t(0) * t(0);
    return (6.0 / t4) * std::pow(v(0), 4) / 24.0;  // psi'''' = 6/theta^4
  };
  return f;
}

/// Normal in natural parameters theta = (mu/s^2, -1/(2 s^2)):
/// T(x) = (x, x^2), psi = -theta1^2/(4 theta2) - log(-2 theta2)/2.
inline ExpFamilyModel builtin_normal_natural() {
  ExpFamilyModel f;
  f.name = "normal-natural";
  f.m = 2;
  f.suff = [](double x) {
    VectorXd t(2);
    t << x, x * x;
    return t;
  };
  f.log_partition = [](const VectorXd& t) {
    return -t(0) * t(0) / (4.0 * t(1)) - 0.5 * std::log(-2.0 * t(1));
  };
  f.in_domain = [](const VectorXd& t) { return t(1) < 0.0; };
  f.sample = [](const VectorXd& t, RngStream& rng) {
    double var = -1.0 / (2.0 * t(1));
    double mean = t(0) * var;
    return mean + std::sqrt(var) * rng.normal();
  };
  f.log_base = [](double) { return -0.5 * std::log(2.0 * M_PI); };
  f.grad_analytic = [](const VectorXd& t) {
    VectorXd g(2);
    g << -t(0) / (2.0 * t(1)), t(0) * t(0) / (4.0 * t(1) * t(1)) - 1.0 / (2.0 * t(1));
    return g;
  };
  f.hessian_analytic = [](const VectorXd& t) {
    // exact differentiation of psi (the identity D2psi = Cov(T) holds for it)
    MatrixXd h(2, 2);
    double t2sq = t(1) * t(1), t2cu = t2sq * t(1);
    h(0, 0) = -1.0 / (2.0 * t(1));
    h(0, 1) = h(1, 0) = t(0) / (2.0 * t2sq);
    h(1, 1) = -t(0) * t(0) / (2.0 * t2cu) + 1.0 / (2.0 * t2sq);
    return h;
  };
  f.quartic_form_analytic = [](const VectorXd& t, const VectorXd& v) {
    double t2 = t(1);
    double t2_3 = t2 * t2 * t2, t2_4 = t2_3 * t2, t2_5 = t2_4 * t2;
    double p1122 = -1.0 / t2_3;
    double p1222 = 3.0 * t(0) / t2_4;
    double p2222 = -6.0 * t(0) * t(0) / t2_5 + 3.0 / t2_4;
    // d^alpha psi with alpha1 >= 3 in theta1 vanish (psi is quadratic in theta1)
    return p1122 / 4.0 * v(0) * v(0) * v(1) * v(1) + p1222 / 6.0 * v(0) * v(1) * v(1) * v(1) +
           p2222 / 24.0 * std::pow(v(1), 4);
  };
  return f;
}

/// Gamma with shape 3 and natural (rate) parameter: T(x) = -x, psi = -3 log(theta).
inline ExpFamilyModel builtin_gamma_shape3() {
  ExpFamilyModel f;
  f.name = "gamma-shape3";
  f.m = 1;
  f.suff = [](double x) { return VectorXd::Constant(1, -x); };
  f.log_partition = [](const VectorXd& t) { return -3.0 * std::log(t(0)); };
  f.in_domain = [](const VectorXd& t) { return t(0) > 0.0; };
  f.sample = [](const VectorXd& t, RngStream& rng) { return rng.gamma(3.0, 1.0 / t(0)); };
  f.log_base = [](double x) { return 2.0 * std::log(x) - std::lgamma(3.0); };
  f.support_lo = 0.0;
  f.grad_analytic = [](const VectorXd& t) { return VectorXd::Constant(1, -3.0 / t(0)); };
  f.hessian_analytic = [](const VectorXd& t) {
    return MatrixXd::Constant(1, 1, 3.0 / (t(0) * t(0)));
  };
  f.quartic_form_analytic = [](const VectorXd& t, const VectorXd& v) {
    double t4 = t(0) * t(0) * t(0) * t(0);
    return (18.0 / t4) * std::pow(v(0), 4) / 24.0;  // psi'''' = 18/theta^4
  };
  return f;
}

// ---------------------------------------------------------------------------
// Moment-parameterized sampling families for the simulator.
// ---------------------------------------------------------------------------

enum class MomentFamilyKind { NormalMoment, GammaMoment, MixtureExpMoment };

inline std::string to_string(MomentFamilyKind k) {
  switch (k) {
    case MomentFamilyKind::NormalMoment: return "normal";
    case MomentFamilyKind::GammaMoment: return "gamma";
    case MomentFamilyKind::MixtureExpMoment: return "mixexp";
  }
  return "?";
}

/// (mu1, mu2) -> (shape, scale) for the Gamma distribution with those first
/// two raw moments.
inline std::pair<double, double> moment_to_gamma(double mu1, double mu2) {
  double var = mu2 - mu1 * mu1;
  if (!(var > 0.0) || !(mu1 > 0.0))
    throw DomainError("moment_to_gamma: need mu2 > mu1^2 > 0");
  return {mu1 * mu1 / var, var / mu1};
}

/// (mu1, mu2) -> rates (lambda1, lambda2) of the fair two-component
/// exponential mixture with those first two raw moments.
inline std::pair<double, double> moment_to_mixture_exp(double mu1, double mu2) {
  double s2 = 2.0 * mu2 - 4.0 * mu1 * mu1;
  if (!(s2 > 0.0)) throw DomainError("moment_to_mixture_exp: 2*mu2 - 4*mu1^2 must be positive");
  double s = std::sqrt(s2);
  if (!(2.0 * mu1 > s)) throw DomainError("moment_to_mixture_exp: second rate not positive");
  return {2.0 / (2.0 * mu1 + s), 2.0 / (2.0 * mu1 - s)};
}

/// A distribution family indexed by its first two raw moments.
struct MomentFamily {
  MomentFamilyKind kind;

  bool valid(double mu1, double mu2) const {
    switch (kind) {
      case MomentFamilyKind::NormalMoment: return mu2 > mu1 * mu1;
      case MomentFamilyKind::GammaMoment: return mu2 > mu1 * mu1 && mu1 > 0.0;
      case MomentFamilyKind::MixtureExpMoment: {
        double s2 = 2.0 * mu2 - 4.0 * mu1 * mu1;
        return s2 > 0.0 && 2.0 * mu1 > std::sqrt(s2);
      }
    }
    return false;
  }

  double sample(double mu1, double mu2, RngStream& rng) const {
    switch (kind) {
      case MomentFamilyKind::NormalMoment: {
        double var = mu2 - mu1 * mu1;
        if (!(var > 0.0)) throw DomainError("normal moment family: non-positive variance");
        return mu1 + std::sqrt(var) * rng.normal();
      }
      case MomentFamilyKind::GammaMoment: {
        auto [shape, scale] = moment_to_gamma(mu1, mu2);
        return rng.gamma(shape, scale);
      }
      case MomentFamilyKind::MixtureExpMoment: {
        auto [l1, l2] = moment_to_mixture_exp(mu1, mu2);
        return rng.exponential(rng.uniform() < 0.5 ? l1 : l2);
      }
    }
    throw InputError("MomentFamily: unknown kind");
  }
};

}  // namespace wsbm
