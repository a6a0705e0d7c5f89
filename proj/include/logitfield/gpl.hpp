#ifndef LOGITFIELD_GPL_HPP
#define LOGITFIELD_GPL_HPP

#include <span>
#include <vector>

#include "logitfield/grid.hpp"
#include "logitfield/kappa.hpp"
#include "logitfield/utility.hpp"

namespace logitfield {

// Semi-discretized generalized pair-wise logit dynamic: a nonlinear Markov
// chain on the grid cells, stepped by forward Euler. dt <= 1 keeps masses
// nonnegative because each cell's mean outflow rate is below 1.
struct GplConfig {
  UniformGrid grid;
  KappaLogit kl;
  double dt = 0.1;
  double t_end = 0.0;          // transient horizon; unused by stationary solves
  double stationary_tol = 1e-10;  // TV change per unit time
  long max_steps = 2'000'000;
  int threads = 0;  // 0 = library default

  void validate() const;
};

struct GplTrajectory {
  std::vector<double> times;
  std::vector<GridMeasure> snapshots;
};

struct GplStationaryResult {
  GridMeasure measure;
  double residual = 0.0;  // TV change per unit time at the final step
  long steps = 0;
};

// Right-hand side of the semi-discretized dynamic:
//   rhs_i = (1/N) sum_j a_{ji} m_j - ((1/N) sum_j a_{ij}) m_i,
// with a_{ij} = logit_rate(U_i, U_j). Sums to zero up to rounding.
std::vector<double> gpl_rhs(const GridMeasure& mu, const UtilityField& u,
                            const KappaLogit& kl, int threads = 0);

// One forward Euler step; output masses are clamped at zero against rounding
// dust and renormalized to total mass one. Materially negative masses (dt too
// large for the rates) raise StabilityError.
GridMeasure gpl_step(const GridMeasure& mu, const UtilityField& u, const GplConfig& cfg);

// Transient run over [0, t_end] storing every snapshot_every-th step (plus the
// initial and final states). The utility is re-evaluated at the current
// measure and time before every step.
GplTrajectory gpl_transient(const GplConfig& cfg, const UtilityModel& model,
                            const GridMeasure& mu0, long snapshot_every = 1);

// Steps a time-independent model until the TV change per unit time falls below
// stationary_tol. Throws ConvergenceError (with the final residual) if
// max_steps is exhausted first.
GplStationaryResult gpl_stationary(const GplConfig& cfg, const UtilityModel& model,
                                   const GridMeasure& mu0);

// For each delta, runs twin transients at kappa_center and kappa_center+delta
// from the same initial condition and reports sup over time of their TV gap.
std::vector<double> kappa_continuity_probe(const GplConfig& cfg, const UtilityModel& model,
                                           const GridMeasure& mu0, double kappa_center,
                                           std::span<const double> deltas);

}  // namespace logitfield

#endif
