#ifndef LOGITFIELD_ROW_KERNELS_HPP
#define LOGITFIELD_ROW_KERNELS_HPP

// Hot inner loops shared by the GPL and MFG solvers. Everything here works on
// one grid row at a time with a fixed left-to-right summation order, so row
// results are identical regardless of how rows are distributed over threads.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "logitfield/kappa.hpp"
#include "logitfield/vec_math.hpp"

namespace logitfield::detail {

constexpr double kLn2 = 0.6931471805599453094172321215;

struct RowScratch {
  std::vector<double> z, a, e, g, l;
  void ensure(std::size_t n) {
    if (z.size() < n) {
      z.resize(n);
      a.resize(n);
      e.resize(n);
      g.resize(n);
      l.resize(n);
    }
  }
};

// Accumulates, for anchor row i of the transition matrix a_{ij} =
// 1/(1 + e_kappa((u_i - u_j)/eta)):
//   out_rate = sum_j a_{ij}            (total outflow intensity)
//   in_dot   = sum_j a_{ji} m_j        (inflow, using a_{ji} = 1 - a_{ij})
// The complement form gives exactly the value row j computes for its own
// a_{ji}, since |z| and the rate r only depend on |u_i - u_j|.
inline void rate_row_accumulate(KappaKind kind, double kappa, double inv_eta,
                                double u_i, std::span<const double> u,
                                std::span<const double> m, RowScratch& s,
                                double& out_rate, double& in_dot) {
  const std::size_t n = u.size();
  s.ensure(n);
  double* z = s.z.data();
  for (std::size_t j = 0; j < n; ++j) z[j] = (u_i - u[j]) * inv_eta;
  double out = 0.0, in = 0.0;
  switch (kind) {
    case KappaKind::Half:
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        double b = 0.5 * (w < 1e150 ? w : 1e150);
        double t = b + std::sqrt(b * b + 1.0);
        double r = 1.0 / (1.0 + t * t);
        double rate = z[j] >= 0.0 ? r : 1.0 - r;
        out += rate;
        in += (z[j] >= 0.0 ? 1.0 - r : r) * m[j];
      }
      break;
    case KappaKind::One:
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        double wc = w < 1e150 ? w : 1e150;
        double r = 1.0 / (1.0 + (wc + std::sqrt(wc * wc + 1.0)));
        out += z[j] >= 0.0 ? r : 1.0 - r;
        in += (z[j] >= 0.0 ? 1.0 - r : r) * m[j];
      }
      break;
    case KappaKind::Classical: {
      double* neg = s.a.data();
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        neg[j] = -(w < 700.0 ? w : 700.0);
      }
      vecm::vexp(neg, s.e.data(), n);
      for (std::size_t j = 0; j < n; ++j) {
        double em = s.e[j];
        double r = em / (1.0 + em);
        out += z[j] >= 0.0 ? r : 1.0 - r;
        in += (z[j] >= 0.0 ? 1.0 - r : r) * m[j];
      }
      break;
    }
    case KappaKind::General: {
      double inv_kappa = 1.0 / kappa;
      double* neg = s.a.data();
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::asinh(kappa * std::fabs(z[j])) * inv_kappa;
        neg[j] = -(w < 700.0 ? w : 700.0);
      }
      vecm::vexp(neg, s.e.data(), n);
      for (std::size_t j = 0; j < n; ++j) {
        double em = s.e[j];
        double r = em / (1.0 + em);
        out += z[j] >= 0.0 ? r : 1.0 - r;
        in += (z[j] >= 0.0 ? 1.0 - r : r) * m[j];
      }
      break;
    }
  }
  out_rate = out;
  in_dot = in;
}

// Fills rates[j] = a_{ij} for anchor i (one matrix row of the logit /
// optimal-control kernel).
inline void rate_row_fill(KappaKind kind, double kappa, double inv_eta, double u_i,
                          std::span<const double> u, RowScratch& s,
                          std::span<double> rates) {
  const std::size_t n = u.size();
  s.ensure(n);
  double* z = s.z.data();
  for (std::size_t j = 0; j < n; ++j) z[j] = (u_i - u[j]) * inv_eta;
  if (kind == KappaKind::Classical || kind == KappaKind::General) {
    double inv_kappa = kind == KappaKind::General ? 1.0 / kappa : 0.0;
    double* neg = s.a.data();
    for (std::size_t j = 0; j < n; ++j) {
      double w = std::fabs(z[j]);
      if (kind == KappaKind::General) w = std::asinh(kappa * w) * inv_kappa;
      neg[j] = -(w < 700.0 ? w : 700.0);
    }
    vecm::vexp(neg, s.e.data(), n);
    for (std::size_t j = 0; j < n; ++j) {
      double r = s.e[j] / (1.0 + s.e[j]);
      rates[j] = z[j] >= 0.0 ? r : 1.0 - r;
    }
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    double r = 1.0 / (1.0 + ekappa_abs(std::fabs(z[j]), kappa));
    rates[j] = z[j] >= 0.0 ? r : 1.0 - r;
  }
}

// Row sum of the Hamiltonian integrand
//   h(d) = d * a*(d) + F(a*(d)),  a*(d) = 1/(1 + e_kappa(d/eta)),
// for d = phi_i - phi_j over all j. Writing h through e_kappa(|z|) removes the
// exp/log calls entirely for kappa = 0.5 and reduces kappa in {0, 1} to one
// vectorized transcendental per element.
inline double hamiltonian_row_sum(KappaKind kind, double kappa, double eta,
                                  double inv_eta, double phi_i,
                                  std::span<const double> phi, RowScratch& s) {
  const std::size_t n = phi.size();
  s.ensure(n);
  double* z = s.z.data();
  for (std::size_t j = 0; j < n; ++j) z[j] = (phi_i - phi[j]) * inv_eta;
  switch (kind) {
    case KappaKind::Half: {
      // h/eta = z*u + 1 - 2 sqrt(u(1-u)), and sqrt(u(1-u)) = t/(1+t^2) with
      // e_kappa(|z|) = t^2.
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        double b = 0.5 * (w < 1e150 ? w : 1e150);
        double t = b + std::sqrt(b * b + 1.0);
        double r = 1.0 / (1.0 + t * t);
        double u = z[j] >= 0.0 ? r : 1.0 - r;
        acc += z[j] * u + 1.0 - 2.0 * t * r;
      }
      return eta * acc;
    }
    case KappaKind::One: {
      // h/eta = z*u - (1/2) ln(4 r (1-r)); r(1-r) is symmetric in the sign
      // of z so the log argument needs |z| only.
      double lin = 0.0;
      double* g = s.g.data();
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        double wc = w < 1e150 ? w : 1e150;
        double r = 1.0 / (1.0 + (wc + std::sqrt(wc * wc + 1.0)));
        double u = z[j] >= 0.0 ? r : 1.0 - r;
        lin += z[j] * u;
        g[j] = 4.0 * r * (1.0 - r);
      }
      vecm::vlog(g, s.l.data(), n);
      double logs = 0.0;
      for (std::size_t j = 0; j < n; ++j) logs += s.l[j];
      return eta * (lin - 0.5 * logs);
    }
    case KappaKind::Classical: {
      // h/eta = ln2 - ln(1 + e^{-|z|}) + min(z, 0).
      double* neg = s.a.data();
      for (std::size_t j = 0; j < n; ++j) {
        double w = std::fabs(z[j]);
        neg[j] = -(w < 700.0 ? w : 700.0);
      }
      vecm::vexp(neg, s.e.data(), n);
      double* g = s.g.data();
      for (std::size_t j = 0; j < n; ++j) g[j] = 1.0 + s.e[j];
      vecm::vlog(g, s.l.data(), n);
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        acc += kLn2 - s.l[j] + (z[j] < 0.0 ? z[j] : 0.0);
      return eta * acc;
    }
    case KappaKind::General:
      break;  // handled below via quadrature
  }
  // General kappa: cost term by adaptive quadrature; slow, opt-in.
  KappaLogit kl(kappa, eta);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double u = rate_from_z(z[j], kappa);
    acc += eta * z[j] * u + cost_F_quadrature(u, kl);
  }
  return acc;
}

}  // namespace logitfield::detail

#endif
