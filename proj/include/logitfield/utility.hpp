#ifndef LOGITFIELD_UTILITY_HPP
#define LOGITFIELD_UTILITY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "logitfield/grid.hpp"

namespace logitfield {

// A utility model maps (time, population measure) to utility values at the
// cell midpoints. Models are immutable after construction; evaluate is pure
// and safe to call concurrently.
class UtilityModel {
 public:
  virtual ~UtilityModel() = default;
  virtual void evaluate(double t, const GridMeasure& mu, std::span<double> out) const = 0;
  virtual bool time_dependent() const { return false; }

  UtilityField evaluate_field(double t, const GridMeasure& mu) const {
    UtilityField f{mu.grid, std::vector<double>(mu.grid.n)};
    evaluate(t, mu, f.values);
    return f;
  }
};

class ConstantUtility : public UtilityModel {
 public:
  explicit ConstantUtility(double value = 0.0) : value_(value) {}
  void evaluate(double, const GridMeasure& mu, std::span<double> out) const override;

 private:
  double value_;
};

// U(x, mu) = sum_m g_m( sum_k f_m(x, x_k) mu_k ), with each kernel sampled on
// the grid as an N x N row-major matrix.
class KernelUtility : public UtilityModel {
 public:
  struct Term {
    std::vector<double> kernel;  // row-major N x N, kernel[i*N + k] = f(x_i, x_k)
    std::function<double(double)> outer;  // identity when empty
  };

  KernelUtility(int n_cells, std::vector<Term> terms);
  void evaluate(double, const GridMeasure& mu, std::span<double> out) const override;

 private:
  int n_;
  std::vector<Term> terms_;
};

// Recreational-fishing utility: arrival cost with a sustainability surcharge
// proportional to the mean arrival rate, plus a harvest gain that grows with
// the seasonal body weight.
struct AnglerParams {
  double a1 = 0.5;      // arrival cost slope
  double a2 = 1.0;      // sustainability coupling
  double a3 = 0.5;      // harvest exponent
  double w_max = 106.0; // asymptotic body weight (g)
  double w0 = 17.0;     // initial body weight (g)
  double r = 0.0223;    // logistic growth rate (1/day)
};

// W_t / W_max for the logistic growth curve; in (0,1], equals w0/w_max at t=0.
double logistic_weight_ratio(double t_days, const AnglerParams& p);

class AnglerUtility : public UtilityModel {
 public:
  explicit AnglerUtility(const AnglerParams& p);
  void evaluate(double t, const GridMeasure& mu, std::span<double> out) const override;
  bool time_dependent() const override { return true; }
  const AnglerParams& params() const { return p_; }

 private:
  AnglerParams p_;
};

// Fishing-competition utility: quadratic harvesting cost, pairwise-difference
// competition term, and an award for placing in the top alpha fraction. The
// tail mass is regularized by a ramp of width epsilon to keep the utility
// Lipschitz.
struct CompetitionParams {
  double b1 = 1.0;
  double b2 = 1.0;
  double b3 = 1.0;
  double b4 = 1.0;
  double alpha = 0.2;
  double epsilon = 0.0;  // <= 0 means "use 1/N of the evaluation grid"
};

class CompetitionUtility : public UtilityModel {
 public:
  explicit CompetitionUtility(const CompetitionParams& p);
  void evaluate(double, const GridMeasure& mu, std::span<double> out) const override;
  const CompetitionParams& params() const { return p_; }

 private:
  CompetitionParams p_;
};

struct MonotonicityReport {
  int violations_found = 0;
  double worst_value = 0.0;  // largest integral seen; <= 0 when monotone
};

// Samples random measure pairs (normalized exponentials, fixed seed) and
// evaluates integral (U(mu) - U(nu)) d(mu - nu); positive values violate the
// monotonicity condition used for MFG uniqueness.
MonotonicityReport monotonicity_probe(const UtilityModel& model, const UniformGrid& grid,
                                      int num_pairs, std::uint64_t seed);

}  // namespace logitfield

#endif
