#include "logitfield/grid.hpp"

#include <cmath>
#include <string>

namespace logitfield {

UniformGrid::UniformGrid(int n_cells) : n(n_cells) {
  if (n_cells < 2) throw std::domain_error("UniformGrid: need at least 2 cells");
  midpoints.resize(n_cells);
  for (int i = 0; i < n_cells; ++i) midpoints[i] = (i + 0.5) / n_cells;
}

double neumaier_sum(std::span<const double> xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

void validate_measure(const GridMeasure& mu, double tol) {
  if (static_cast<int>(mu.masses.size()) != mu.grid.n)
    throw ShapeError("GridMeasure: masses/grid size mismatch");
  for (double m : mu.masses) {
    if (!(m >= 0.0) || !std::isfinite(m))
      throw std::domain_error("GridMeasure: negative or non-finite mass");
  }
  double total = neumaier_sum(mu.masses);
  if (std::fabs(total - 1.0) > tol)
    throw std::domain_error("GridMeasure: total mass " + std::to_string(total) +
                            " differs from 1");
}

double tv_distance(const GridMeasure& mu, const GridMeasure& nu) {
  if (mu.grid.n != nu.grid.n || mu.masses.size() != nu.masses.size())
    throw ShapeError("tv_distance: measures live on different grids");
  double s = 0.0;
  for (std::size_t i = 0; i < mu.masses.size(); ++i)
    s += std::fabs(mu.masses[i] - nu.masses[i]);
  return s;
}

Moments moments(const GridMeasure& mu) {
  if (static_cast<int>(mu.masses.size()) != mu.grid.n)
    throw ShapeError("moments: masses/grid size mismatch");
  double mean = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) mean += mu.grid.midpoints[i] * mu.masses[i];
  double var = 0.0;
  for (int i = 0; i < mu.grid.n; ++i) {
    double d = mu.grid.midpoints[i] - mean;
    var += d * d * mu.masses[i];
  }
  return {mean, std::sqrt(var > 0.0 ? var : 0.0)};
}

GridMeasure uniform_measure(const UniformGrid& grid) {
  GridMeasure mu{grid, std::vector<double>(grid.n, 1.0 / grid.n)};
  return mu;
}

GridMeasure point_mass(const UniformGrid& grid, int cell) {
  if (cell < 0 || cell >= grid.n) throw std::domain_error("point_mass: cell out of range");
  GridMeasure mu{grid, std::vector<double>(grid.n, 0.0)};
  mu.masses[cell] = 1.0;
  return mu;
}

std::vector<double> coarsen_field(std::span<const double> fine, int factor) {
  if (factor < 1) throw std::domain_error("coarsen_field: factor must be positive");
  if (fine.size() % static_cast<std::size_t>(factor) != 0)
    throw ShapeError("coarsen_field: length not divisible by factor");
  std::size_t nc = fine.size() / factor;
  std::vector<double> coarse(nc);
  double inv = 1.0 / factor;
  for (std::size_t i = 0; i < nc; ++i) {
    double s = 0.0;
    for (int k = 0; k < factor; ++k) s += fine[i * factor + k];
    coarse[i] = s * inv;
  }
  return coarse;
}

std::vector<double> densities(const GridMeasure& mu) {
  std::vector<double> p(mu.masses.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = mu.masses[i] * mu.grid.n;
  return p;
}

}  // namespace logitfield
