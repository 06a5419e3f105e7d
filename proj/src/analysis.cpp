#include "qudit_magic/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include <Eigen/QR>

#include "qudit_magic/parallel.hpp"

namespace qudit_magic {

namespace {

// Bisects g on [lo, hi] with g(lo) < 0 <= g(hi) down to width tol.
std::pair<Real, Real> bisect(const std::function<Real(Real)>& g, Real lo,
                             Real hi, Real tol) {
  while (hi - lo > tol) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// First sign change of g from negative to non-negative along `grid`.
std::optional<std::pair<Real, Real>> first_crossing(
    const std::function<Real(Real)>& g, const std::vector<Real>& grid) {
  if (grid.empty() || g(grid.front()) >= 0) return std::nullopt;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (g(grid[i]) >= 0) return std::make_pair(grid[i - 1], grid[i]);
  }
  return std::nullopt;
}

std::vector<Real> geometric_grid(Real lo, Real hi, int points) {
  std::vector<Real> g(points);
  const Real ratio = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo * std::exp(ratio * i);
  g.back() = hi;
  return g;
}

// Error grid for one-round threshold scans on small codes.
const std::vector<Real>& direction_scan_grid() {
  static const std::vector<Real> grid = [] {
    std::vector<Real> g = geometric_grid(1e-6L, 1e-2L, 41);
    g.pop_back();
    for (int i = 2; i <= 200; ++i) g.push_back(Real(i) / 200);
    return g;
  }();
  return grid;
}

// Compass search over the simplex: moves of size h from one coordinate to
// another, halving h when no move improves. Minimizes f.
template <typename F>
std::pair<ArrayX<Real>, Real> simplex_pattern_search(F&& f, ArrayX<Real> x,
                                                     Real value, Real h,
                                                     Real h_min) {
  const Eigen::Index n = x.size();
  while (h >= h_min) {
    bool improved = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        const Real step = std::min(h, x[j]);
        if (step <= 0) continue;
        ArrayX<Real> y = x;
        y[i] += step;
        y[j] -= step;
        const Real v = f(y);
        if (v < value) {
          x = std::move(y);
          value = v;
          improved = true;
        }
      }
    }
    if (!improved) h /= 2;
  }
  return {x, value};
}

void compositions(int parts, int remaining, ArrayX<Real>& cur, int index,
                  int resolution, std::vector<ArrayX<Real>>& out) {
  if (index == parts - 1) {
    cur[index] = Real(remaining) / resolution;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur[index] = Real(k) / resolution;
    compositions(parts, remaining - k, cur, index + 1, resolution, out);
  }
}

}  // namespace

std::vector<ArrayX<Real>> simplex_grid(int parts, int resolution) {
  std::vector<ArrayX<Real>> out;
  ArrayX<Real> cur(parts);
  compositions(parts, resolution, cur, 0, resolution, out);
  return out;
}

ThresholdResult threshold_depolarizing(int d, int m, Real tol) {
  if (!protocol_applicable(d, m)) {
    throw std::invalid_argument("no distillation protocol for d=" +
                                std::to_string(d) + " m=" + std::to_string(m));
  }
  const DepolarizingMap<Real> map(d, m);
  const std::function<Real(Real)> g = [&](Real e) { return map(e).epsilon_out - e; };
  const Real top = Real(d - 1) / d - tol;
  const auto grid = geometric_grid(std::max(tol, Real(1e-15)), top, 4000);
  const auto bracket = first_crossing(g, grid);
  if (!bracket) throw NoRoot("depolarizing map never stops contracting");
  auto [lo, hi] = bisect(g, bracket->first, bracket->second, tol);
  ThresholdResult r;
  r.kind = ThresholdKind::depolarizing;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.epsilon_star = lo + (hi - lo) / 2;
  r.direction = ArrayX<Real>::Constant(d - 1, Real(1) / (d - 1));
  return r;
}

ThresholdResult threshold_along(const IterationTable& table,
                                const ArrayX<Real>& direction, Real tol) {
  if (direction.size() != table.d() - 1) {
    throw DimensionMismatch("direction must have d-1 entries");
  }
  const std::function<Real(Real)> g = [&](Real e) {
    return iterate_general(table, noise_along(direction, e)).epsilon_out - e;
  };
  const auto bracket = first_crossing(g, direction_scan_grid());
  if (!bracket) throw NoRoot("map contracts along the whole direction");
  auto [lo, hi] = bisect(g, bracket->first, bracket->second, tol);
  ThresholdResult r;
  r.kind = ThresholdKind::worst_case;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.epsilon_star = lo + (hi - lo) / 2;
  r.direction = direction / direction.sum();
  return r;
}

ThresholdResult threshold_worst_case(const IterationTable& table,
                                     const SearchOptions& options) {
  const int parts = table.d() - 1;
  const auto grid = simplex_grid(parts, options.resolution);
  std::vector<Real> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    values[i] = threshold_along(table, grid[i], 1e-7L).epsilon_star;
  });
  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  auto objective = [&](const ArrayX<Real>& x) {
    return threshold_along(table, x, 1e-7L).epsilon_star;
  };
  auto [dir, value] = simplex_pattern_search(
      objective, grid[best], values[best], Real(1) / options.resolution, 1e-6L);
  (void)value;
  ThresholdResult r = threshold_along(table, dir, options.tol);
  r.kind = ThresholdKind::worst_case;
  return r;
}

BoundResult quadratic_bound_constant(const IterationTable& table,
                                     const SearchOptions& options) {
  const int parts = table.d() - 1;
  const auto dirs = simplex_grid(parts, options.resolution);
  const auto eps_grid = geometric_grid(1e-6L, 0.999L, 120);
  auto ratio = [&](Real e, const ArrayX<Real>& dir) {
    return iterate_general(table, noise_along(dir, e)).epsilon_out / (e * e);
  };
  std::vector<std::pair<Real, std::size_t>> best(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t i) {
    Real k = -1;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < eps_grid.size(); ++j) {
      const Real v = ratio(eps_grid[j], dirs[i]);
      if (v > k) {
        k = v;
        arg = j;
      }
    }
    best[i] = {k, arg};
  });
  std::size_t bi = 0;
  for (std::size_t i = 1; i < best.size(); ++i) {
    if (best[i].first > best[bi].first) bi = i;
  }
  // Joint refinement over (log eps, direction), maximizing.
  Real log_eps = std::log(eps_grid[best[bi].second]);
  ArrayX<Real> dir = dirs[bi];
  Real value = best[bi].first;
  Real h = 0.05L;
  while (h > 1e-9L) {
    bool improved = false;
    for (int s : {-1, 1}) {
      const Real le = log_eps + s * h;
      if (le >= std::log(Real(1)) || le < std::log(Real(1e-8))) continue;
      const Real v = ratio(std::exp(le), dir);
      if (v > value) {
        value = v;
        log_eps = le;
        improved = true;
      }
    }
    auto [ndir, nvalue] = simplex_pattern_search(
        [&](const ArrayX<Real>& x) { return -ratio(std::exp(log_eps), x); },
        dir, -value, h, h);
    if (-nvalue > value) {
      value = -nvalue;
      dir = ndir;
      improved = true;
    }
    if (!improved) h /= 2;
  }
  return BoundResult{value, std::exp(log_eps), dir};
}

CoarseBounds coarse_bounds(int d, int m, int distance) {
  if (distance < 2) throw std::invalid_argument("coarse bounds need distance >= 2");
  const long long n = ipow(d, m) - 1;
  CoarseBounds b;
  b.c = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n - m)) - 1;
  b.k = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(distance)) * b.c;
  // k may exceed the Real range for large codes; go through logarithms.
  const unsigned top = static_cast<unsigned>(boost::multiprecision::msb(b.k));
  const unsigned shift = top > 60 ? top - 60 : 0u;
  const Real mantissa = static_cast<Real>(BigInt(b.k >> shift));
  const Real lk = std::log(mantissa) + Real(shift) * std::log(Real(2));
  b.epsilon_star = std::exp(-lk / (distance - 1));
  return b;
}

FloorResult success_probability_floor(const IterationTable& table,
                                      const SearchOptions& options) {
  const auto grid = simplex_grid(table.d(), options.resolution);
  auto prob = [&](const ArrayX<Real>& f) {
    NoiseVector<Real> n;
    n.f = f;
    return iterate_general(table, n).success_probability;
  };
  std::vector<Real> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { values[i] = prob(grid[i]); });
  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  auto [f, value] = simplex_pattern_search(prob, grid[best], values[best],
                                           Real(1) / options.resolution, 1e-9L);
  return FloorResult{value, f};
}

YieldResult yield(const IterationTable& table, const NoiseVector<Real>& noise,
                  Real epsilon_target, int max_rounds) {
  YieldResult r;
  r.gamma_star = std::log2(Real(table.n()));
  NoiseVector<Real> cur = noise;
  r.final_epsilon = cur.epsilon();
  r.final_parity = cur.parity;
  while (r.final_epsilon > epsilon_target) {
    if (r.rounds == max_rounds) {
      throw NotConverged("error " + std::to_string(static_cast<double>(r.final_epsilon)) +
                         " above target after " + std::to_string(max_rounds) +
                         " rounds");
    }
    const auto it = iterate_general(table, cur);
    r.probabilities.push_back(it.success_probability);
    r.yield *= it.success_probability / table.n();
    cur = it.output;
    r.final_epsilon = it.epsilon_out;
    r.final_parity = cur.parity;
    ++r.rounds;
  }
  return r;
}

Real gamma_star(int d, int m) {
  if (!protocol_applicable(d, m)) {
    throw std::invalid_argument("no distillation protocol for this (d, m)");
  }
  // Log base is the suppression order: eps' ~ eps^3 for the qubit code,
  // eps^2 otherwise.
  const Real order = d == 2 ? 3 : 2;
  return std::log(static_cast<Real>(ipow(d, m) - 1)) / std::log(order);
}

Real yield_scaling_slope(const IterationTable& table,
                         const NoiseVector<Real>& noise,
                         const std::vector<Real>& targets) {
  Eigen::Matrix<Real, Eigen::Dynamic, 2> a(targets.size(), 2);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> b(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    a(i, 0) = std::log(-std::log(targets[i]));
    a(i, 1) = 1;
    b[i] = std::log(yield(table, noise, targets[i], 100000).yield);
  }
  const Eigen::Matrix<Real, 2, 1> x = a.colPivHouseholderQr().solve(b);
  return x[0];
}

bool is_distillable(const IterationTable& table, const NoiseVector<Real>& noise,
                    int target, int max_rounds, Real eps_goal) {
  const int d = table.d();
  NoiseVector<Real> cur = noise;
  int t = mod_reduce(target, d);
  for (int round = 0;; ++round) {
    const Real err = cur.f.sum() - cur.f[t];
    if (err <= eps_goal) return true;
    if (round == max_rounds) return false;
    cur = iterate_general(table, cur).output;
    t = (d - t) % d;
  }
}

std::vector<RegionPoint> distillable_region_qutrit(const IterationTable& table,
                                                   int resolution,
                                                   int max_rounds,
                                                   Real eps_goal) {
  if (table.d() != 3) throw DimensionMismatch("region map needs a qutrit code");
  std::vector<RegionPoint> pts;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; i + j <= resolution; ++j) {
      pts.push_back(RegionPoint{Real(i) / resolution, Real(j) / resolution, false});
    }
  }
  parallel_for(pts.size(), [&](std::size_t k) {
    NoiseVector<Real> n;
    n.f.resize(3);
    n.f << Real(1) - pts[k].f1 - pts[k].f2, pts[k].f1, pts[k].f2;
    n.f[0] = std::max(n.f[0], Real(0));
    for (int t = 0; t < 3 && !pts[k].distillable; ++t) {
      pts[k].distillable = is_distillable(table, n, t, max_rounds, eps_goal);
    }
  });
  return pts;
}

}  // namespace qudit_magic
