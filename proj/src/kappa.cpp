#include "logitfield/kappa.hpp"

#include <cmath>

namespace logitfield {

namespace {

constexpr double kBoundary = 1e-12;

double clamp_unit(double u) {
  if (!(u >= 0.0 && u <= 1.0) || !std::isfinite(u))
    throw std::domain_error("cost_F: u must lie in [0,1]");
  if (u < kBoundary) return kBoundary;
  if (u > 1.0 - kBoundary) return 1.0 - kBoundary;
  return u;
}

double simpson(double (*f)(double, const KappaLogit&), const KappaLogit& kl,
               double a, double fa, double b, double fb, double fm, double whole,
               double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm, kl), frm = f(rm, kl);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson(f, kl, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         simpson(f, kl, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double cost_F(double u, const KappaLogit& kl) {
  u = clamp_unit(u);
  switch (kl.kind()) {
    case KappaKind::Classical:
      return kl.eta * ((1.0 - u) * std::log(1.0 - u) + u * std::log(u) +
                       0.6931471805599453094172321215);
    case KappaKind::Half:
      return kl.eta * (1.0 - 2.0 * std::sqrt(u * (1.0 - u)));
    case KappaKind::One:
      return -kl.eta * std::log(2.0 * std::sqrt(u * (1.0 - u)));
    case KappaKind::General:
      throw UnsupportedKappaError(
          "cost_F: closed form exists only for kappa in {0, 0.5, 1}; "
          "use cost_F_quadrature for other values");
  }
  return 0.0;  // unreachable
}

double cost_F_prime(double u, const KappaLogit& kl) {
  u = clamp_unit(u);
  return -kl.eta * kappa_log((1.0 - u) / u, kl.kappa);
}

double cost_F_quadrature(double u, const KappaLogit& kl) {
  u = clamp_unit(u);
  double a = 0.5, b = u;
  if (a == b) return 0.0;
  double fa = cost_F_prime(a, kl);
  double fb = cost_F_prime(b, kl);
  double fm = cost_F_prime(0.5 * (a + b), kl);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(&cost_F_prime, kl, a, fa, b, fb, fm, whole, 1e-13, 40);
}

}  // namespace logitfield
