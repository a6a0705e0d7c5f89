#ifndef LOGITFIELD_MFG_HPP
#define LOGITFIELD_MFG_HPP

#include <span>
#include <vector>

#include "logitfield/grid.hpp"
#include "logitfield/kappa.hpp"
#include "logitfield/utility.hpp"

namespace logitfield {

// Discretized mean field game: explicit backward sweep of the HJB equation for
// the value function phi, explicit forward sweep of the FP equation under the
// optimal control, and a damped fixed-point iteration coupling the two.
struct MfgConfig {
  UniformGrid grid;
  KappaLogit kl;            // kappa in {0, 0.5, 1} unless allow_quadrature_cost
  double t_end = 40.0;      // horizon T
  long n_steps = 4000;      // M; dt = T/M
  double omega = 0.125;     // damping factor in (0,1)
  double tol = 1e-10;       // per-point convergence tolerance
  long max_iters = 2000;
  int threads = 0;
  bool allow_quadrature_cost = false;  // permit general kappa (slow)

  // Early exits for runs that will never meet tol: residual blow-up and
  // stagnation (no residual progress across a trailing window). Both report
  // as non-convergence outcomes rather than running out the iteration budget.
  double divergence_residual = 1e8;
  long stagnation_window = 250;  // 0 disables

  double dt() const { return t_end / static_cast<double>(n_steps); }
  void validate() const;
};

enum class MfgOutcome { Converged, MaxIterations, Diverged, Stagnated };

const char* to_string(MfgOutcome outcome);

struct MfgSolution {
  Trajectory mu;   // masses, slices 0..M
  Trajectory phi;  // value function, slice M identically zero
  long iterations = 0;
  std::vector<double> residual_history;  // max undamped update per iteration
  MfgOutcome outcome = MfgOutcome::Converged;

  bool converged() const { return outcome == MfgOutcome::Converged; }
};

struct QuasiStationarySlice {
  GridMeasure mu_mid;      // measure at t = T/2
  double phi_slope = 0.0;  // spatially averaged d(phi)/dt at T/2
};

// Optimal control matrix a*_{ij} = F'^{-1}(phi_j - phi_i)
//                               = 1/(1 + e_kappa((phi_i - phi_j)/eta)).
std::vector<double> optimal_control(const UtilityField& phi, const KappaLogit& kl);

// Spatial HJB operator:
//   Xi_i = (1/N) sum_j (phi_i - phi_j) a*_{ij} + (1/N) sum_j F(a*_{ij}) - U_i.
std::vector<double> hjb_rhs(const UtilityField& phi, const UtilityField& u,
                            const KappaLogit& kl, int threads = 0,
                            bool allow_quadrature_cost = false);

// Backward sweep: phi(M) = 0, phi(k-1) = phi(k) - Xi(mu(k), phi(k)) dt.
Trajectory backward_sweep(const Trajectory& mu_traj, const UtilityModel& model,
                          const MfgConfig& cfg);

// Forward sweep: mu(k) = mu(k-1) + Lambda(mu(k-1), phi(k-1)) dt, with the
// transition rates a* built from phi. Slices are clamped/renormalized like
// GPL steps.
Trajectory forward_sweep(const Trajectory& phi_traj, const GridMeasure& mu0,
                         const MfgConfig& cfg);

// Damped forward-backward fixed-point iteration from zero initial guesses.
// The first iteration installs the sweep outputs directly (damping against
// the zero guesses would only slow the approach and break the mass-1 property
// of the stored slices); subsequent iterations apply the damped update.
// Non-convergence is an outcome, not an exception.
MfgSolution solve_mfg(const MfgConfig& cfg, const UtilityModel& model,
                      const GridMeasure& mu0);

// Mid-horizon extraction: the measure at k = M/2 and the centered-difference
// time slope of phi averaged over the grid.
QuasiStationarySlice quasi_stationary_slice(const MfgSolution& sol, const MfgConfig& cfg);

}  // namespace logitfield

#endif
