// bench.hpp
// Timing of the linear strategy precomputation and the quadratic solver,
// with log-log least-squares growth exponents.

#pragma once

#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <vector>

namespace pizza {

struct TimingPoint {
  std::size_t n = 0;
  double median_seconds = 0;
};

struct ScalingFit {
  std::vector<TimingPoint> points;
  double exponent = 0;
};

/// Slope of log(time) against log(n).
inline double fit_exponent(std::span<const TimingPoint> pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto k = static_cast<double>(pts.size());
  for (const auto& p : pts) {
    double x = std::log(static_cast<double>(p.n));
    double y = std::log(std::max(p.median_seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

namespace detail {

inline volatile std::int64_t bench_sink = 0;

inline ScaledSizes<std::int64_t> bench_sizes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(0, 9);
  ScaledSizes<std::int64_t> s;
  s.values.resize(n);
  for (auto& v : s.values) v = size(rng) < 6 ? 0 : size(rng);
  return s;
}

template <class F>
double median_time(int repeat, F&& f) {
  std::vector<double> t;
  for (int r = 0; r < std::max(repeat, 1); ++r) {
    auto start = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

}  // namespace detail

/// Builds the 4/9 plan on odd n = 2^k + 1 for k in [lo_exp, hi_exp].
inline ScalingFit bench_precompute(int lo_exp, int hi_exp, int repeat) {
  ScalingFit fit;
  for (int e = lo_exp; e <= hi_exp; ++e) {
    std::size_t n = (std::size_t{1} << e) + 1;
    auto sizes = detail::bench_sizes(n, 7 + static_cast<std::uint64_t>(e));
    double t = detail::median_time(repeat, [&] {
      detail::bench_sink = static_cast<std::int64_t>(plan_dispatch_49(sizes).move.plan.first);
    });
    fit.points.push_back({n, t});
  }
  fit.exponent = fit_exponent(fit.points);
  return fit;
}

/// Fills the value table for each n in `ns`.
inline ScalingFit bench_solver(std::span<const std::size_t> ns, int repeat) {
  ScalingFit fit;
  for (std::size_t n : ns) {
    auto sizes = detail::bench_sizes(n, 11 + n);
    double t = detail::median_time(repeat, [&] {
      BasicValueTable<std::int64_t> table(std::span<const std::int64_t>(sizes.values));
      detail::bench_sink = table.alice_value();
    });
    fit.points.push_back({n, t});
  }
  fit.exponent = fit_exponent(fit.points);
  return fit;
}

inline std::vector<std::size_t> solver_bench_sizes(std::size_t max_n = 2000) {
  std::vector<std::size_t> ns;
  for (std::size_t n : {100, 200, 300, 500, 700, 1000, 1400, 2000})
    if (n <= max_n) ns.push_back(n);
  return ns;
}

}  // namespace pizza
