#ifndef LOGITFIELD_KAPPA_HPP
#define LOGITFIELD_KAPPA_HPP

#include <cmath>
#include <stdexcept>

#include "logitfield/errors.hpp"

namespace logitfield {

// Which evaluation path a given kappa uses. The closed forms avoid exp/log
// entirely for kappa = 0.5 and 1, which is what makes the O(N^2) solver loops
// affordable at the resolutions used in the applications.
enum class KappaKind { Classical, Half, One, General };

constexpr KappaKind kappa_kind(double kappa) {
  if (kappa == 0.0) return KappaKind::Classical;
  if (kappa == 0.5) return KappaKind::Half;
  if (kappa == 1.0) return KappaKind::One;
  return KappaKind::General;
}

// Shape parameter kappa in [0,1] plus noise intensity eta > 0.
struct KappaLogit {
  double kappa = 0.0;
  double eta = 1.0;

  KappaLogit() = default;
  KappaLogit(double kappa_, double eta_) : kappa(kappa_), eta(eta_) {
    if (!(kappa >= 0.0 && kappa <= 1.0) || !std::isfinite(kappa))
      throw std::domain_error("KappaLogit: kappa must be in [0,1]");
    if (!(eta > 0.0) || !std::isfinite(eta))
      throw std::domain_error("KappaLogit: eta must be positive");
  }

  KappaKind kind() const { return kappa_kind(kappa); }
  bool has_closed_form_cost() const { return kind() != KappaKind::General; }
};

namespace detail {

// e_kappa(w) for w >= 0. Nonnegative arguments avoid the cancellation in
// kappa*z + sqrt(kappa^2 z^2 + 1) for z < 0; negative arguments go through the
// reciprocal identity e_kappa(-w) = 1/e_kappa(w). Exponents are clamped at 700
// so results saturate instead of overflowing.
inline double ekappa_abs(double w, double kappa) {
  switch (kappa_kind(kappa)) {
    case KappaKind::Classical:
      return std::exp(w < 700.0 ? w : 700.0);
    case KappaKind::Half: {
      double b = 0.5 * (w < 1e150 ? w : 1e150);
      double t = b + std::sqrt(b * b + 1.0);
      return t * t;
    }
    case KappaKind::One: {
      double wc = w < 1e150 ? w : 1e150;
      return wc + std::sqrt(wc * wc + 1.0);
    }
    case KappaKind::General: {
      double a = std::asinh(kappa * w) / kappa;
      return std::exp(a < 700.0 ? a : 700.0);
    }
  }
  return 1.0;  // unreachable
}

// 1 / (1 + e_kappa(z)), strictly inside (0,1) for any finite z.
inline double rate_from_z(double z, double kappa) {
  double r = 1.0 / (1.0 + ekappa_abs(std::fabs(z), kappa));
  return z >= 0.0 ? r : 1.0 - r;
}

}  // namespace detail

// Hyperbolic generalization of exp: (kz + sqrt(k^2 z^2 + 1))^(1/k) for k > 0,
// plain exp at k = 0. Strictly increasing, positive, e(z) e(-z) = 1.
inline double kappa_exp(double z, double kappa) {
  if (!std::isfinite(z)) throw std::domain_error("kappa_exp: z must be finite");
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw std::domain_error("kappa_exp: kappa must be in [0,1]");
  double e = detail::ekappa_abs(std::fabs(z), kappa);
  return z >= 0.0 ? e : 1.0 / e;
}

// Inverse of kappa_exp: (z^k - z^-k) / 2k for k > 0, ln(z) at k = 0.
inline double kappa_log(double z, double kappa) {
  if (!(z > 0.0)) throw std::domain_error("kappa_log: z must be positive");
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw std::domain_error("kappa_log: kappa must be in [0,1]");
  double l = std::log(z);
  if (kappa == 0.0) return l;
  return std::sinh(kappa * l) / kappa;
}

// Rate at which a player holding utility u_from switches to an action worth
// u_to: 1 / (1 + e_kappa((u_from - u_to)/eta)).
inline double logit_rate(double u_from, double u_to, const KappaLogit& kl) {
  if (!std::isfinite(u_from) || !std::isfinite(u_to))
    throw std::domain_error("logit_rate: utilities must be finite");
  return detail::rate_from_z((u_from - u_to) / kl.eta, kl.kappa);
}

// Control cost of choosing jump intensity u, normalized so F(1/2) = 0.
// Closed forms exist for kappa in {0, 0.5, 1} only. u is clamped away from the
// boundary (the kappa=1 form diverges there and optimal controls can round to
// exactly 0 or 1 in finite precision).
double cost_F(double u, const KappaLogit& kl);

// F'(u) = -eta * l_kappa((1-u)/u); valid for every kappa in [0,1].
double cost_F_prime(double u, const KappaLogit& kl);

// Inverse of F': 1 / (1 + e_kappa(-z/eta)). This is the optimal jump intensity
// for a value gap z, identical in form to logit_rate.
inline double cost_F_prime_inv(double z, const KappaLogit& kl) {
  if (!std::isfinite(z)) throw std::domain_error("cost_F_prime_inv: z must be finite");
  return detail::rate_from_z(-z / kl.eta, kl.kappa);
}

// Numeric fallback for general kappa: adaptive-Simpson integral of F' from 1/2
// to u. Also serves as an independent cross-check of the closed forms.
double cost_F_quadrature(double u, const KappaLogit& kl);

}  // namespace logitfield

#endif
