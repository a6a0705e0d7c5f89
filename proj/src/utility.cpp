#include "logitfield/utility.hpp"

#include <cmath>
#include <random>

namespace logitfield {

void ConstantUtility::evaluate(double, const GridMeasure& mu, std::span<double> out) const {
  if (out.size() != mu.masses.size()) throw ShapeError("ConstantUtility: output size mismatch");
  for (auto& v : out) v = value_;
}

KernelUtility::KernelUtility(int n_cells, std::vector<Term> terms)
    : n_(n_cells), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.kernel.size() != static_cast<std::size_t>(n_) * n_)
      throw ShapeError("KernelUtility: kernel matrix is not N x N");
  }
}

void KernelUtility::evaluate(double, const GridMeasure& mu, std::span<double> out) const {
  if (mu.grid.n != n_ || out.size() != static_cast<std::size_t>(n_))
    throw ShapeError("KernelUtility: grid size mismatch");
  for (int i = 0; i < n_; ++i) out[i] = 0.0;
  for (const auto& term : terms_) {
    const double* K = term.kernel.data();
    for (int i = 0; i < n_; ++i) {
      double inner = 0.0;
      for (int k = 0; k < n_; ++k) inner += K[static_cast<std::size_t>(i) * n_ + k] * mu.masses[k];
      out[i] += term.outer ? term.outer(inner) : inner;
    }
  }
}

double logistic_weight_ratio(double t_days, const AnglerParams& p) {
  return 1.0 / (1.0 + (p.w_max / p.w0 - 1.0) * std::exp(-p.r * t_days));
}

AnglerUtility::AnglerUtility(const AnglerParams& p) : p_(p) {
  if (!(p.w0 > 0.0 && p.w0 <= p.w_max)) throw std::domain_error("AnglerParams: need 0 < w0 <= w_max");
  if (!(p.r > 0.0)) throw std::domain_error("AnglerParams: growth rate must be positive");
  if (p.a1 < 0.0 || p.a2 < 0.0 || p.a3 < 0.0)
    throw std::domain_error("AnglerParams: coefficients must be nonnegative");
}

void AnglerUtility::evaluate(double t, const GridMeasure& mu, std::span<double> out) const {
  if (out.size() != mu.masses.size()) throw ShapeError("AnglerUtility: output size mismatch");
  // The measure enters only through its mean, so the integral over mu(dy)
  // collapses to a closed form.
  double mean = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) mean += mu.grid.midpoints[i] * mu.masses[i];
  double w = logistic_weight_ratio(t, p_);
  double cost = p_.a1 * (1.0 + p_.a2 * mean);
  for (int i = 0; i < mu.grid.n; ++i) {
    double x = mu.grid.midpoints[i];
    out[i] = -cost * x + std::pow(w * x, p_.a3);
  }
}

CompetitionUtility::CompetitionUtility(const CompetitionParams& p) : p_(p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0))
    throw std::domain_error("CompetitionParams: alpha must be in (0,1)");
  if (p.b1 < 0.0 || p.b2 < 0.0 || p.b3 < 0.0 || p.b4 < 0.0)
    throw std::domain_error("CompetitionParams: coefficients must be nonnegative");
}

void CompetitionUtility::evaluate(double, const GridMeasure& mu, std::span<double> out) const {
  const int n = mu.grid.n;
  if (out.size() != static_cast<std::size_t>(n)) throw ShapeError("CompetitionUtility: output size mismatch");
  const auto& x = mu.grid.midpoints;
  const auto& m = mu.masses;
  const double eps = p_.epsilon > 0.0 ? p_.epsilon : 1.0 / n;

  // Pairwise term. b3 = 1 admits an O(N) prefix-sum form.
  std::vector<double> pair_term(n);
  if (p_.b3 == 1.0) {
    double c = 0.0, d = 0.0;
    std::vector<double> cum_mass(n), cum_xm(n);
    for (int j = 0; j < n; ++j) {
      c += m[j];
      d += x[j] * m[j];
      cum_mass[j] = c;
      cum_xm[j] = d;
    }
    double c_tot = cum_mass[n - 1], d_tot = cum_xm[n - 1];
    for (int i = 0; i < n; ++i)
      pair_term[i] = x[i] * (2.0 * cum_mass[i] - c_tot) + d_tot - 2.0 * cum_xm[i];
  } else {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += std::pow(std::fabs(x[i] - x[j]), p_.b3) * m[j];
      pair_term[i] = s;
    }
  }

  // Regularized tail mass: full weight for x_j >= x_i plus the ramp window
  // (x_i - eps, x_i). With eps = 1/N the window contributes nothing and the
  // tail is exactly the suffix sum from cell i.
  std::vector<double> suffix(n + 1, 0.0);
  for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + m[j];
  int window = static_cast<int>(std::ceil(eps * n)) + 1;
  for (int i = 0; i < n; ++i) {
    double tail = suffix[i];
    for (int j = i - 1; j >= 0 && j >= i - window; --j) {
      double w = (x[j] - x[i] + eps) / eps;
      if (w <= 0.0) break;
      tail += (w < 1.0 ? w : 1.0) * m[j];
    }
    double award_gap = p_.alpha - tail;
    out[i] = -p_.b1 * x[i] * x[i] + p_.b2 * pair_term[i] +
             p_.b4 * (award_gap > 0.0 ? award_gap : 0.0);
  }
}

MonotonicityReport monotonicity_probe(const UtilityModel& model, const UniformGrid& grid,
                                      int num_pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto random_measure = [&] {
    GridMeasure mu{grid, std::vector<double>(grid.n)};
    double total = 0.0;
    for (auto& m : mu.masses) {
      m = -std::log(1.0 - unif(rng));
      total += m;
    }
    for (auto& m : mu.masses) m /= total;
    return mu;
  };
  MonotonicityReport rep;
  std::vector<double> u_mu(grid.n), u_nu(grid.n);
  bool first = true;
  for (int p = 0; p < num_pairs; ++p) {
    GridMeasure mu = random_measure();
    GridMeasure nu = random_measure();
    model.evaluate(0.0, mu, u_mu);
    model.evaluate(0.0, nu, u_nu);
    double integral = 0.0;
    for (int i = 0; i < grid.n; ++i)
      integral += (u_mu[i] - u_nu[i]) * (mu.masses[i] - nu.masses[i]);
    if (integral > 0.0) ++rep.violations_found;
    if (first || integral > rep.worst_value) {
      rep.worst_value = integral;
      first = false;
    }
  }
  return rep;
}

}  // namespace logitfield
