#ifndef QUDIT_MAGIC_ANALYSIS_HPP_
#define QUDIT_MAGIC_ANALYSIS_HPP_

#include <vector>

#include "qudit_magic/distillation.hpp"

namespace qudit_magic {

enum class ThresholdKind { depolarizing, worst_case };

struct ThresholdResult {
  Real epsilon_star = 0;
  ThresholdKind kind = ThresholdKind::depolarizing;
  // The map contracts at bracket_lo and does not contract at bracket_hi.
  Real bracket_lo = 0;
  Real bracket_hi = 0;
  // Noise direction f_{k>0} / eps on the (d-1)-simplex.
  ArrayX<Real> direction;
};

// Smallest positive root of eps'(eps) = eps under depolarizing noise.
ThresholdResult threshold_depolarizing(int d, int m, Real tol = 1e-9L);

// Smallest eps at which one round along `direction` stops reducing eps.
ThresholdResult threshold_along(const IterationTable& table,
                                const ArrayX<Real>& direction,
                                Real tol = 1e-9L);

struct SearchOptions {
  int resolution = 40;  // simplex grid spacing 1/resolution
  Real tol = 1e-9L;
};

// Minimum of threshold_along over the direction simplex.
ThresholdResult threshold_worst_case(const IterationTable& table,
                                     const SearchOptions& options = {});

struct BoundResult {
  Real k = 0;
  Real epsilon = 0;
  ArrayX<Real> direction;
};

// sup over eps in (0, 1) and all directions of eps' / eps^2.
BoundResult quadratic_bound_constant(const IterationTable& table,
                                     const SearchOptions& options = {});

struct CoarseBounds {
  BigInt c;             // |L_X^perp| - 1
  BigInt k;             // d^D c
  Real epsilon_star;    // k^{-1/(D-1)}
};

CoarseBounds coarse_bounds(int d, int m, int distance);

struct FloorResult {
  Real probability = 0;
  ArrayX<Real> f;
};

// Minimum success probability over the full noise simplex.
FloorResult success_probability_floor(const IterationTable& table,
                                      const SearchOptions& options = {});

struct YieldResult {
  int rounds = 0;
  std::vector<Real> probabilities;
  Real yield = 1;
  Real gamma_star = 0;
  Real final_epsilon = 0;
  BasisParity final_parity = BasisParity::magic;
};

YieldResult yield(const IterationTable& table, const NoiseVector<Real>& noise,
                  Real epsilon_target, int max_rounds = 200);

// log_D(d^m - 1), D = 3 for d = 2 and 2 otherwise.
Real gamma_star(int d, int m);

// Least-squares slope of log Y against log log(1/eps_target).
Real yield_scaling_slope(const IterationTable& table,
                         const NoiseVector<Real>& noise,
                         const std::vector<Real>& targets);

// Rounds alternate the target component t, -t, t, ...; distillable when the
// error relative to the current target reaches eps_goal within max_rounds.
bool is_distillable(const IterationTable& table, const NoiseVector<Real>& noise,
                    int target, int max_rounds, Real eps_goal = 1e-6L);

struct RegionPoint {
  Real f1 = 0;
  Real f2 = 0;
  bool distillable = false;
};

// Grid f1 = i / resolution, f2 = j / resolution with f1 + f2 <= 1, in
// row-major (i, j) order; a point is distillable when some starting target
// is reached. The table must be built from a qutrit code.
std::vector<RegionPoint> distillable_region_qutrit(const IterationTable& table,
                                                   int resolution,
                                                   int max_rounds,
                                                   Real eps_goal = 1e-6L);

// Points of the simplex {x >= 0, sum x = 1} in `parts` coordinates with
// spacing 1/resolution, in lexicographic order.
std::vector<ArrayX<Real>> simplex_grid(int parts, int resolution);

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_ANALYSIS_HPP_
