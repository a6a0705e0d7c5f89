#include "logitfield/gpl.hpp"

#include <cmath>
#include <string>

#include "logitfield/parallel.hpp"
#include "row_kernels.hpp"

namespace logitfield {

namespace {

constexpr double kNegativeMassTol = -1e-12;
// Row-parallel assembly only pays off once rows carry enough work.
constexpr int kParallelMinCells = 128;

int effective_threads(const GplConfig& cfg) {
  int t = cfg.threads > 0 ? cfg.threads : default_threads();
  return cfg.grid.n >= kParallelMinCells ? t : 1;
}

void rhs_into(std::span<const double> masses, std::span<const double> u,
              const KappaLogit& kl, int threads, std::span<double> rhs) {
  const std::size_t n = masses.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const KappaKind kind = kl.kind();
  const double inv_eta = 1.0 / kl.eta;
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    detail::RowScratch scratch;
    for (std::size_t i = begin; i < end; ++i) {
      double out_rate = 0.0, in_dot = 0.0;
      detail::rate_row_accumulate(kind, kl.kappa, inv_eta, u[i], u, masses, scratch,
                                  out_rate, in_dot);
      rhs[i] = (in_dot - out_rate * masses[i]) * inv_n;
    }
  });
}

// Euler update + nonnegativity clamp + renormalization. The raw update
// conserves mass only to rounding; dividing by the compensated total keeps
// long trajectories on the probability simplex.
void euler_update(std::vector<double>& masses, std::span<const double> rhs, double dt) {
  for (std::size_t i = 0; i < masses.size(); ++i) {
    double q = masses[i] + dt * rhs[i];
    if (q < 0.0) {
      if (q < kNegativeMassTol)
        throw StabilityError("gpl_step: negative mass " + std::to_string(q) +
                             " in cell " + std::to_string(i) + "; reduce dt");
      q = 0.0;
    }
    masses[i] = q;
  }
  double total = neumaier_sum(masses);
  if (!(total > 0.0) || !std::isfinite(total))
    throw StabilityError("gpl_step: total mass became invalid");
  double inv = 1.0 / total;
  for (auto& m : masses) m *= inv;
}

long transient_step_count(const GplConfig& cfg) {
  double ratio = cfg.t_end / cfg.dt;
  long steps = std::lround(ratio);
  if (steps < 1 || std::fabs(ratio - static_cast<double>(steps)) > 1e-9)
    throw std::domain_error("GplConfig: t_end must be an integer multiple of dt");
  if (steps > cfg.max_steps)
    throw std::domain_error("GplConfig: t_end/dt exceeds max_steps");
  return steps;
}

}  // namespace

void GplConfig::validate() const {
  if (grid.n < 2) throw std::domain_error("GplConfig: grid has fewer than 2 cells");
  if (!(dt > 0.0) || dt > 1.0)
    throw std::domain_error("GplConfig: dt must lie in (0, 1] for nonnegative masses");
  if (!(stationary_tol > 0.0)) throw std::domain_error("GplConfig: stationary_tol must be positive");
  if (max_steps < 1) throw std::domain_error("GplConfig: max_steps must be positive");
}

std::vector<double> gpl_rhs(const GridMeasure& mu, const UtilityField& u,
                            const KappaLogit& kl, int threads) {
  if (mu.grid.n != u.grid.n || mu.masses.size() != u.values.size())
    throw ShapeError("gpl_rhs: measure and utility field sizes differ");
  std::vector<double> rhs(mu.masses.size());
  int t = threads > 0 ? threads : default_threads();
  if (mu.grid.n < kParallelMinCells) t = 1;
  rhs_into(mu.masses, u.values, kl, t, rhs);
  return rhs;
}

GridMeasure gpl_step(const GridMeasure& mu, const UtilityField& u, const GplConfig& cfg) {
  cfg.validate();
  std::vector<double> rhs = gpl_rhs(mu, u, cfg.kl, cfg.threads);
  GridMeasure next = mu;
  euler_update(next.masses, rhs, cfg.dt);
  return next;
}

GplTrajectory gpl_transient(const GplConfig& cfg, const UtilityModel& model,
                            const GridMeasure& mu0, long snapshot_every) {
  cfg.validate();
  if (snapshot_every < 1) throw std::domain_error("gpl_transient: snapshot_every must be positive");
  if (mu0.grid.n != cfg.grid.n) throw ShapeError("gpl_transient: initial measure grid mismatch");
  const long steps = transient_step_count(cfg);
  const int threads = effective_threads(cfg);

  GplTrajectory traj;
  GridMeasure cur = mu0;
  std::vector<double> u(cfg.grid.n), rhs(cfg.grid.n);
  traj.times.push_back(0.0);
  traj.snapshots.push_back(cur);
  for (long k = 0; k < steps; ++k) {
    double t = static_cast<double>(k) * cfg.dt;
    model.evaluate(t, cur, u);
    rhs_into(cur.masses, u, cfg.kl, threads, rhs);
    euler_update(cur.masses, rhs, cfg.dt);
    if ((k + 1) % snapshot_every == 0 || k + 1 == steps) {
      traj.times.push_back(static_cast<double>(k + 1) * cfg.dt);
      traj.snapshots.push_back(cur);
    }
  }
  return traj;
}

GplStationaryResult gpl_stationary(const GplConfig& cfg, const UtilityModel& model,
                                   const GridMeasure& mu0) {
  cfg.validate();
  if (model.time_dependent())
    throw std::domain_error("gpl_stationary: model must be time-independent");
  if (mu0.grid.n != cfg.grid.n) throw ShapeError("gpl_stationary: initial measure grid mismatch");
  const int threads = effective_threads(cfg);

  GridMeasure cur = mu0;
  std::vector<double> u(cfg.grid.n), rhs(cfg.grid.n), prev(cfg.grid.n);
  double residual = 0.0;
  for (long k = 0; k < cfg.max_steps; ++k) {
    model.evaluate(0.0, cur, u);
    rhs_into(cur.masses, u, cfg.kl, threads, rhs);
    prev = cur.masses;
    euler_update(cur.masses, rhs, cfg.dt);
    double tv = 0.0;
    for (std::size_t i = 0; i < prev.size(); ++i) tv += std::fabs(cur.masses[i] - prev[i]);
    residual = tv / cfg.dt;
    if (residual < cfg.stationary_tol)
      return {std::move(cur), residual, k + 1};
  }
  throw ConvergenceError("gpl_stationary: no fixed point within " +
                             std::to_string(cfg.max_steps) + " steps (residual " +
                             std::to_string(residual) + ")",
                         residual);
}

std::vector<double> kappa_continuity_probe(const GplConfig& cfg, const UtilityModel& model,
                                           const GridMeasure& mu0, double kappa_center,
                                           std::span<const double> deltas) {
  cfg.validate();
  const long steps = transient_step_count(cfg);
  const int threads = effective_threads(cfg);

  std::vector<double> gaps;
  gaps.reserve(deltas.size());
  for (double delta : deltas) {
    KappaLogit kl_a(kappa_center, cfg.kl.eta);
    KappaLogit kl_b(kappa_center + delta, cfg.kl.eta);
    GridMeasure a = mu0, b = mu0;
    std::vector<double> ua(cfg.grid.n), ub(cfg.grid.n), rhs(cfg.grid.n);
    double sup_gap = 0.0;
    for (long k = 0; k < steps; ++k) {
      double t = static_cast<double>(k) * cfg.dt;
      model.evaluate(t, a, ua);
      rhs_into(a.masses, ua, kl_a, threads, rhs);
      euler_update(a.masses, rhs, cfg.dt);
      model.evaluate(t, b, ub);
      rhs_into(b.masses, ub, kl_b, threads, rhs);
      euler_update(b.masses, rhs, cfg.dt);
      double tv = tv_distance(a, b);
      if (tv > sup_gap) sup_gap = tv;
    }
    gaps.push_back(sup_gap);
  }
  return gaps;
}

}  // namespace logitfield
