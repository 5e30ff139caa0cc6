#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace planarlim {

/// Compressed adjacency for walk kernels.
struct Csr {
  std::vector<int> offset;
  std::vector<int> target;
  std::vector<double> inv_degree;

  explicit Csr(const Graph& g) {
    const int n = g.num_vertices();
    offset.assign(static_cast<std::size_t>(n) + 1, 0);
    inv_degree.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      offset[v + 1] = offset[v] + g.degree(v);
      inv_degree[v] = g.degree(v) > 0 ? 1.0 / g.degree(v) : 0.0;
      for (int w : g.neighbors(v)) target.push_back(w);
    }
  }
  int size() const { return static_cast<int>(inv_degree.size()); }
};

struct WalkMode {
  enum class Kind { kExact, kMonteCarlo };
  Kind kind = Kind::kExact;
  long samples = 10000;  // Monte Carlo walks, or sampled starts for large exact runs
  std::uint64_t seed = 1;
  int jobs = 1;
  bool use_symmetry = true;  // exact mode: one start per automorphism orbit found
  int exact_all_starts_limit = 5000;

  static WalkMode exact() { return {}; }
  static WalkMode monte_carlo(long samples, std::uint64_t seed) {
    WalkMode m;
    m.kind = Kind::kMonteCarlo;
    m.samples = samples;
    m.seed = seed;
    return m;
  }
};

/// phi[t] for t = 0..horizon (phi[0] = 1) with standard errors (zero when exact).
struct PhiCurve {
  std::vector<double> phi;
  std::vector<double> std_error;
  bool exact = true;
  long starts = 0;   // distinct start vertices evaluated (exact) or walks (Monte Carlo)
  long samples = 0;  // walks or sampled starts behind the estimate; 0 for a full average

  double at(int t) const { return phi.at(static_cast<std::size_t>(t)); }
  double err(int t) const { return std_error.at(static_cast<std::size_t>(t)); }
};

namespace detail {

/// P_v(X_j != v for j = 1..t) for t = 0..horizon, by pushing the walk's mass
/// forward and absorbing whatever lands on v. The absorbed mass is subtracted,
/// so the curve is nonincreasing in floating point too.
inline std::vector<double> survival_from(const Csr& csr, int v, int horizon) {
  const int n = csr.size();
  std::vector<double> p(static_cast<std::size_t>(n), 0.0), q(p), next(p);
  std::vector<double> out(static_cast<std::size_t>(horizon) + 1, 1.0);
  p[v] = 1.0;
  for (int t = 1; t <= horizon; ++t) {
    for (int w = 0; w < n; ++w) q[w] = p[w] * csr.inv_degree[w];
    for (int x = 0; x < n; ++x) {
      double acc = 0;
      for (int e = csr.offset[x]; e < csr.offset[x + 1]; ++e) acc += q[csr.target[e]];
      next[x] = acc;
    }
    out[t] = std::max(0.0, out[t - 1] - next[v]);
    next[v] = 0.0;
    p.swap(next);
  }
  return out;
}

template <class Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<long>(count, 64))));
  if (jobs == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (long i = j; i < count; i += jobs) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// The whole curve t -> phi(t, G) for t <= horizon: the probability that simple
/// random walk from a uniform start avoids its start during steps 1..t.
inline PhiCurve phi_curve(const Graph& g, int horizon, const WalkMode& mode = {}) {
  if (horizon < 1) throw InvalidInput("horizon must be at least 1");
  const int n = g.num_vertices();
  if (n < 2) throw InvalidInput("random walk needs at least two vertices");
  if (!is_connected(g)) throw InvalidInput("random walk needs a connected graph");
  if (mode.samples < 1) throw InvalidInput("sample count must be positive");
  const Csr csr(g);
  PhiCurve out;
  out.phi.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
  out.std_error.assign(static_cast<std::size_t>(horizon) + 1, 0.0);

  if (mode.kind == WalkMode::Kind::kMonteCarlo) {
    out.exact = false;
    out.samples = out.starts = mode.samples;
    // First return time of each walk (horizon + 1 when it never returns).
    std::vector<int> first_return(static_cast<std::size_t>(mode.samples));
    detail::parallel_for(mode.samples, mode.jobs, [&](long i) {
      std::mt19937_64 rng(detail::splitmix64(mode.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i)));
      const int start = std::uniform_int_distribution<int>(0, n - 1)(rng);
      int x = start;
      int t = 1;
      for (; t <= horizon; ++t) {
        const int d = csr.offset[x + 1] - csr.offset[x];
        x = csr.target[csr.offset[x] + std::uniform_int_distribution<int>(0, d - 1)(rng)];
        if (x == start) break;
      }
      first_return[i] = t;
    });
    std::vector<long> returned_at(static_cast<std::size_t>(horizon) + 2, 0);
    for (int t : first_return) ++returned_at[t];
    long alive = mode.samples;
    out.phi[0] = 1.0;
    for (int t = 1; t <= horizon; ++t) {
      alive -= returned_at[t];
      const double p = static_cast<double>(alive) / mode.samples;
      out.phi[t] = p;
      out.std_error[t] = std::sqrt(p * (1 - p) / mode.samples);
    }
    return out;
  }

  // Exact: average the per-start survival curves.
  std::vector<int> starts;
  std::vector<double> weight;
  if (n <= mode.exact_all_starts_limit) {
    std::vector<int> rep(static_cast<std::size_t>(n));
    if (mode.use_symmetry)
      rep = automorphism_orbits(g);
    else
      std::iota(rep.begin(), rep.end(), 0);
    std::map<int, long> orbit_size;
    for (int v = 0; v < n; ++v) ++orbit_size[rep[v]];
    for (const auto& [v, size] : orbit_size) {
      starts.push_back(v);
      weight.push_back(static_cast<double>(size) / n);
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long i = 0; i < mode.samples; ++i) {
      starts.push_back(pick(rng));
      weight.push_back(1.0 / static_cast<double>(mode.samples));
    }
    out.samples = mode.samples;
  }
  out.starts = static_cast<long>(starts.size());
  std::vector<std::vector<double>> curves(starts.size());
  detail::parallel_for(static_cast<long>(starts.size()), mode.jobs,
                       [&](long i) { curves[i] = detail::survival_from(csr, starts[i], horizon); });
  for (std::size_t i = 0; i < starts.size(); ++i)
    for (int t = 0; t <= horizon; ++t) out.phi[t] += weight[i] * curves[i][t];
  if (out.samples > 0) {
    // Sampled starts: standard error of the mean over starts.
    for (int t = 0; t <= horizon; ++t) {
      double ss = 0;
      for (const auto& c : curves) ss += (c[t] - out.phi[t]) * (c[t] - out.phi[t]);
      const double m = static_cast<double>(curves.size());
      out.std_error[t] = m > 1 ? std::sqrt(ss / (m - 1) / m) : 0.0;
    }
    out.exact = false;
  }
  return out;
}

inline double phi(const Graph& g, int horizon, const WalkMode& mode = {}) {
  return phi_curve(g, horizon, mode).at(horizon);
}

struct PhiProfileRow {
  std::string label;
  int vertices = 0;
  int horizon = 0;
  double phi = 0;
  double std_error = 0;
  double phi_log_horizon = 0;  // phi * log(horizon)
};

/// phi at several horizons for each graph of a family.
inline std::vector<PhiProfileRow> phi_profile(
    const std::vector<std::pair<std::string, Graph>>& family, const std::vector<int>& horizons,
    const WalkMode& mode = {}) {
  if (horizons.empty()) throw InvalidInput("no horizons given");
  const int top = *std::max_element(horizons.begin(), horizons.end());
  std::vector<PhiProfileRow> rows;
  for (const auto& [label, g] : family) {
    const PhiCurve curve = phi_curve(g, top, mode);
    for (int h : horizons)
      rows.push_back({label, g.num_vertices(), h, curve.at(h), curve.err(h),
                      curve.at(h) * std::log(static_cast<double>(h))});
  }
  return rows;
}

struct ReturnProfile {
  std::vector<double> p;        // p[t] = P_o(X_t = o), t = 0..n
  double max_mass_error = 0;    // max_t |sum_v P(X_t = v) - 1|
};

/// Return probabilities by iterating the walk's distribution from o.
inline ReturnProfile return_profile(const Graph& g, int o, int n) {
  if (n < 0) throw InvalidInput("time must be nonnegative");
  if (o < 0 || o >= g.num_vertices()) throw InvalidInput("vertex out of range");
  const Csr csr(g);
  const int size = csr.size();
  std::vector<double> p(static_cast<std::size_t>(size), 0.0), q(p), next(p);
  p[o] = 1.0;
  ReturnProfile out;
  out.p.push_back(1.0);
  for (int t = 1; t <= n; ++t) {
    for (int w = 0; w < size; ++w) q[w] = p[w] * csr.inv_degree[w];
    double total = 0;
    for (int x = 0; x < size; ++x) {
      double acc = 0;
      for (int e = csr.offset[x]; e < csr.offset[x + 1]; ++e) acc += q[csr.target[e]];
      next[x] = acc;
      total += acc;
    }
    p.swap(next);
    out.p.push_back(p[o]);
    out.max_mass_error = std::max(out.max_mass_error, std::abs(total - 1.0));
  }
  return out;
}

inline double return_probability(const Graph& g, int o, int n) {
  if (g.degree(o) == 0 && n > 0) throw InvalidInput("isolated vertex has no walk");
  return return_profile(g, o, n).p.back();
}

struct GrowthProfile {
  std::vector<long> ball_size;  // |B(o, r)| for r = 0..r_max
  std::vector<int> fit_radii;   // radii used in the fit
  double alpha = 0;             // least-squares slope of log |B| against log r
};

/// Ball sizes around o and the growth exponent fitted on radii
/// round(4 * 2^(j/4)) in [4, r_max / 2].
inline GrowthProfile growth_profile(const Graph& g, int o, int r_max) {
  if (o < 0 || o >= g.num_vertices()) throw InvalidInput("vertex out of range");
  const int ecc = eccentricity(g, o);
  if (r_max > ecc)
    throw InvalidInput("r_max " + std::to_string(r_max) + " exceeds the eccentricity " +
                       std::to_string(ecc));
  if (r_max < 8) throw InvalidInput("r_max must be at least 8 to fit an exponent");
  const auto dist = bfs_distances(g, o);
  GrowthProfile out;
  out.ball_size.assign(static_cast<std::size_t>(r_max) + 1, 0);
  for (int d : dist)
    if (d != kUnreached && d <= r_max) ++out.ball_size[d];
  for (int r = 1; r <= r_max; ++r) out.ball_size[r] += out.ball_size[r - 1];
  for (int j = 0;; ++j) {
    const int r = static_cast<int>(std::lround(4.0 * std::pow(2.0, j / 4.0)));
    if (2 * r > r_max) break;
    if (out.fit_radii.empty() || out.fit_radii.back() != r) out.fit_radii.push_back(r);
  }
  if (out.fit_radii.size() < 2) throw InvalidInput("fit window holds fewer than two radii");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(out.fit_radii.size());
  for (int r : out.fit_radii) {
    const double x = std::log(static_cast<double>(r));
    const double y = std::log(static_cast<double>(out.ball_size[r]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.alpha = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

}  // namespace planarlim
