#ifndef LOGITFIELD_DYNAMICS_CORE_HPP
#define LOGITFIELD_DYNAMICS_CORE_HPP

// Shared stepping machinery for the GPL dynamic and the MFG forward sweep:
// both advance cell masses under pairwise logit-form transition rates built
// from a field of utilities (GPL) or value-function samples (MFG).

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "logitfield/errors.hpp"
#include "logitfield/grid.hpp"
#include "logitfield/kappa.hpp"
#include "logitfield/parallel.hpp"
#include "row_kernels.hpp"

namespace logitfield::detail {

constexpr double kNegativeMassTol = -1e-12;
// Row-parallel assembly only pays off once rows carry enough work.
constexpr int kParallelMinCells = 128;

inline void drift_into(std::span<const double> masses, std::span<const double> field,
                       const KappaLogit& kl, int threads, std::span<double> rhs) {
  const std::size_t n = masses.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const KappaKind kind = kl.kind();
  const double inv_eta = 1.0 / kl.eta;
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    RowScratch scratch;
    for (std::size_t i = begin; i < end; ++i) {
      double out_rate = 0.0, in_dot = 0.0;
      rate_row_accumulate(kind, kl.kappa, inv_eta, field[i], field, masses, scratch,
                          out_rate, in_dot);
      rhs[i] = (in_dot - out_rate * masses[i]) * inv_n;
    }
  });
}

// Euler update + nonnegativity clamp + renormalization. The raw update
// conserves mass only to rounding; dividing by the compensated total keeps
// long trajectories on the probability simplex.
inline void mass_euler_update(std::span<double> masses, std::span<const double> rhs,
                              double dt) {
  for (std::size_t i = 0; i < masses.size(); ++i) {
    double q = masses[i] + dt * rhs[i];
    if (q < 0.0) {
      if (q < kNegativeMassTol)
        throw StabilityError("mass update: negative mass " + std::to_string(q) +
                             " in cell " + std::to_string(i) + "; reduce dt");
      q = 0.0;
    }
    masses[i] = q;
  }
  double total = neumaier_sum({masses.data(), masses.size()});
  if (!(total > 0.0) || !std::isfinite(total))
    throw StabilityError("mass update: total mass became invalid");
  double inv = 1.0 / total;
  for (auto& m : masses) m *= inv;
}

}  // namespace logitfield::detail

#endif
