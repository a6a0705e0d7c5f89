#ifndef LOGITFIELD_GRID_HPP
#define LOGITFIELD_GRID_HPP

#include <span>
#include <vector>

#include "logitfield/errors.hpp"

namespace logitfield {

// N >= 2 equal cells on [0,1]; cell i (1-based) is [(i-1)/N, i/N) with
// midpoint (i-1/2)/N.
struct UniformGrid {
  int n = 0;
  std::vector<double> midpoints;

  UniformGrid() = default;
  explicit UniformGrid(int n_cells);

  double width() const { return 1.0 / n; }
  bool operator==(const UniformGrid& o) const { return n == o.n; }
};

// Probability measure stored as cell masses. Invariants (masses >= 0, total
// mass 1 within 1e-12) are maintained by the producers and checked by
// validate_measure at API boundaries.
struct GridMeasure {
  UniformGrid grid;
  std::vector<double> masses;
};

// Utility or value-function samples at the cell midpoints.
struct UtilityField {
  UniformGrid grid;
  std::vector<double> values;
};

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

// Time-indexed stack of grid fields stored contiguously; slice k holds the
// field at time step k.
struct Trajectory {
  int n_cells = 0;
  std::size_t n_slices = 0;
  std::vector<double> data;

  Trajectory() = default;
  Trajectory(int cells, std::size_t slices)
      : n_cells(cells),
        n_slices(slices),
        data(static_cast<std::size_t>(cells) * slices, 0.0) {}

  std::span<double> slice(std::size_t k) {
    return {data.data() + k * static_cast<std::size_t>(n_cells),
            static_cast<std::size_t>(n_cells)};
  }
  std::span<const double> slice(std::size_t k) const {
    return {data.data() + k * static_cast<std::size_t>(n_cells),
            static_cast<std::size_t>(n_cells)};
  }
};

// Compensated (Neumaier) summation; effectively exact for the mass totals
// handled here.
double neumaier_sum(std::span<const double> xs);

void validate_measure(const GridMeasure& mu, double tol = 1e-9);

// Total variation distance sum_i |m_i - n_i|; in [0,2] for probability
// measures.
double tv_distance(const GridMeasure& mu, const GridMeasure& nu);

// Mean and population standard deviation of the action distribution.
Moments moments(const GridMeasure& mu);

GridMeasure uniform_measure(const UniformGrid& grid);

// Point mass on one cell; handy for tests and as an extreme initial condition.
GridMeasure point_mass(const UniformGrid& grid, int cell);

// Block arithmetic mean: each coarse entry averages `factor` consecutive fine
// entries. Length must be divisible by factor.
std::vector<double> coarsen_field(std::span<const double> fine, int factor);

// Cell densities p_i = N * m_i; the resolution-independent representation used
// when comparing measures across grids.
std::vector<double> densities(const GridMeasure& mu);

}  // namespace logitfield

#endif
