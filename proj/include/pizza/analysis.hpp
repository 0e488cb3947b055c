// analysis.hpp
// Half-circles, potentials, minimal triples and the six-arc partition of the
// characteristic cycle. Everything here is templated on the number type so it
// runs on rescaled integers in hot paths and on Rational in tests.
//
// Conventions: V has odd length n, m = (n-1)/2, a half-circle is an arc of
// m+1 consecutive elements, and s[i] is the size of the half-circle starting
// at element i (clockwise).

#pragma once

#include "pizza/cutting.hpp"

#include <array>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pizza {

struct CycleArc {
  std::size_t start = 0;
  std::size_t length = 0;

  bool contains(std::size_t k, std::size_t n) const { return (k + n - start) % n < length; }
  std::size_t first() const { return start; }
  std::size_t last(std::size_t n) const { return (start + length + n - 1) % n; }
  /// Cycle index of the element at offset t within the arc.
  std::size_t at(std::size_t t, std::size_t n) const { return (start + t) % n; }

  friend bool operator==(const CycleArc&, const CycleArc&) = default;
};

template <class T>
T arc_size(std::span<const T> v, const CycleArc& arc) {
  T sum = 0;
  for (std::size_t t = 0; t < arc.length; ++t) sum += v[arc.at(t, v.size())];
  return sum;
}

inline std::size_t half_circle_length(std::size_t n) { return (n + 1) / 2; }

inline void require_odd(std::size_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("cycle analysis needs an odd number of slices");
}

// ---------------------------------------------------------------------------
// Half-circle sizes

template <class T>
struct HalfCircleSizes {
  std::vector<T> sizes;
  std::size_t min_index = 0;  // smallest start among minimum-size half-circles
};

/// Sliding window: s[i] = s[i-1] - v[i-1] + v[i+m].
template <class T>
HalfCircleSizes<T> half_circle_sizes(std::span<const T> v) {
  std::size_t n = v.size();
  require_odd(n);
  std::size_t h = half_circle_length(n);
  HalfCircleSizes<T> out;
  out.sizes.resize(n);
  T s = 0;
  for (std::size_t j = 0; j < h; ++j) s += v[j];
  out.sizes[0] = s;
  for (std::size_t i = 1; i < n; ++i) {
    s -= v[i - 1];
    s += v[(i + h - 1) % n];
    out.sizes[i] = s;
    if (s < out.sizes[out.min_index]) out.min_index = i;
  }
  return out;
}

template <class T>
std::vector<T> half_circle_sizes_naive(std::span<const T> v) {
  std::size_t n = v.size();
  require_odd(n);
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = arc_size(v, CycleArc{i, half_circle_length(n)});
  return out;
}

// ---------------------------------------------------------------------------
// Potentials

template <class T>
struct PotentialTable {
  std::vector<T> half_circles;    // s
  std::vector<T> element;         // potential of every element
  T cycle = 0;                    // p(V)
  std::size_t argmax = 0;         // smallest index whose potential is p(V)
  std::size_t min_half_circle = 0;  // start of the fixed minimum half-circle H
  CycleArc uncovered;             // X: the m elements outside H
  // Along X (offset t is element X.at(t)): the right potential covers the
  // last element of X, the left potential the first; *_arg holds the start
  // of a realising half-circle.
  std::vector<T> right, left;
  std::vector<std::size_t> right_arg, left_arg;
};

/// O(n): sliding-window sizes, a monotone-deque window minimum for the
/// potential of every element, and prefix minima p_l, p_r along the arc X
/// uncovered by a minimum half-circle. `fixed` selects H when several
/// half-circles tie; it must have minimum size.
template <class T>
PotentialTable<T> potential_table(std::span<const T> v, std::optional<std::size_t> fixed = std::nullopt) {
  std::size_t n = v.size();
  require_odd(n);
  std::size_t m = (n - 1) / 2;
  auto hc = half_circle_sizes(v);
  PotentialTable<T> t;
  t.half_circles = std::move(hc.sizes);
  const auto& s = t.half_circles;
  t.min_half_circle = hc.min_index;
  if (fixed) {
    if (s[*fixed % n] != s[hc.min_index])
      throw std::invalid_argument("fixed half-circle is not of minimum size");
    t.min_half_circle = *fixed % n;
  }

  // Element i is covered by the half-circles starting at i-m .. i.
  t.element.resize(n);
  if (n == 1) {
    t.element[0] = v[0];
  } else {
    std::deque<std::size_t> window;  // starts with increasing sizes
    auto push = [&](std::size_t start) {
      while (!window.empty() && !(s[window.back() % n] < s[start % n])) window.pop_back();
      window.push_back(start);
    };
    for (std::size_t start = n - m; start < n; ++start) push(start);
    for (std::size_t i = 0; i < n; ++i) {
      push(n + i);
      while (window.front() + m < n + i) window.pop_front();
      t.element[i] = s[window.front() % n];
    }
  }

  std::size_t h = m + 1;
  std::size_t k = (t.min_half_circle + h) % n;
  t.uncovered = CycleArc{k, m};
  if (m == 0) {
    t.cycle = v[0];
    t.argmax = 0;
    return t;
  }
  t.right.resize(m);
  t.left.resize(m);
  t.right_arg.resize(m);
  t.left_arg.resize(m);
  std::size_t before = (k + n - 1) % n;
  std::size_t both = s[before] < s[k] ? before : k;  // the two half-circles covering all of X
  t.right[0] = s[both];
  t.right_arg[0] = both;
  for (std::size_t off = 1; off < m; ++off) {
    std::size_t start = (k + off) % n;
    if (s[start] < t.right[off - 1]) {
      t.right[off] = s[start];
      t.right_arg[off] = start;
    } else {
      t.right[off] = t.right[off - 1];
      t.right_arg[off] = t.right_arg[off - 1];
    }
  }
  t.left[m - 1] = s[both];
  t.left_arg[m - 1] = both;
  for (std::size_t off = m - 1; off-- > 0;) {
    std::size_t start = (k + off + n - m) % n;
    if (s[start] < t.left[off + 1]) {
      t.left[off] = s[start];
      t.left_arg[off] = start;
    } else {
      t.left[off] = t.left[off + 1];
      t.left_arg[off] = t.left_arg[off + 1];
    }
  }
  // Elements of H cannot beat X (H is minimal), so p(V) is the maximum on X.
  t.cycle = t.left[0] < t.right[0] ? t.left[0] : t.right[0];
  for (std::size_t off = 1; off < m; ++off) {
    const T& p = t.left[off] < t.right[off] ? t.left[off] : t.right[off];
    if (t.cycle < p) t.cycle = p;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t.element[i] == t.cycle) {
      t.argmax = i;
      break;
    }
  return t;
}

/// Reference definition: min over covering half-circles, each summed directly.
template <class T>
std::vector<T> potentials_naive(std::span<const T> v) {
  std::size_t n = v.size();
  require_odd(n);
  std::size_t h = half_circle_length(n);
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<T> best;
    for (std::size_t start = 0; start < n; ++start) {
      CycleArc arc{start, h};
      if (!arc.contains(i, n)) continue;
      T size = arc_size(v, arc);
      if (!best || size < *best) best = size;
    }
    out[i] = *best;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Six-arc partition

enum ArcName { kA = 0, kB, kC, kD, kE, kF };

/// Arcs A..F in circular order with ABC, CDE, EFA the triple's half-circles.
/// Arcs are always stored clockwise; relabelled partitions may list them in
/// counter-clockwise order.
template <class T>
struct SixArcPartition {
  std::size_t n = 0;
  std::array<CycleArc, 6> arcs{};
  std::array<T, 6> sizes{};

  const T& a() const { return sizes[kA]; }
  const T& b() const { return sizes[kB]; }
  const T& c() const { return sizes[kC]; }
  const T& d() const { return sizes[kD]; }
  const T& e() const { return sizes[kE]; }
  const T& f() const { return sizes[kF]; }
  const CycleArc& arc(ArcName x) const { return arcs[x]; }

  T sum_abc() const { return a() + b() + c(); }
  T sum_cde() const { return c() + d() + e(); }
  T sum_efa() const { return e() + f() + a(); }
  T min_cd_fa() const { return c() + d() < f() + a() ? T(c() + d()) : T(f() + a()); }

  /// C D E F A B relabelled as A..F.
  SixArcPartition rotated() const { return permuted({kC, kD, kE, kF, kA, kB}); }
  /// The mirror image: A, F, E, D, C, B relabelled as A..F.
  SixArcPartition reflected() const { return permuted({kA, kF, kE, kD, kC, kB}); }

  /// A relabelling with a+b+c <= c+d+e <= e+f+a.
  SixArcPartition normalized() const {
    SixArcPartition p = *this;
    for (int r = 0; r < 3; ++r, p = p.rotated())
      for (const auto& q : {p, p.reflected()})
        if (!(q.sum_cde() < q.sum_abc()) && !(q.sum_efa() < q.sum_cde())) return q;
    throw std::logic_error("no normalising relabelling found");
  }

 private:
  SixArcPartition permuted(std::array<ArcName, 6> from) const {
    SixArcPartition p;
    p.n = n;
    for (int i = 0; i < 6; ++i) {
      p.arcs[i] = arcs[from[i]];
      p.sizes[i] = sizes[from[i]];
    }
    return p;
  }
};

template <class T>
struct MinimalTriple {
  std::array<std::size_t, 3> starts{};  // half-circles ABC, CDE, EFA
  std::array<T, 3> sizes{};
  SixArcPartition<T> partition;
};

/// Builds the six arcs from three half-circle starts (abc, cde, efa).
/// Throws std::logic_error when they do not interlock as a minimal triple
/// must when p(V) < |V|/2.
template <class T>
SixArcPartition<T> partition_from_triple(std::span<const T> v, std::size_t abc, std::size_t cde, std::size_t efa) {
  std::size_t n = v.size();
  auto h = static_cast<std::ptrdiff_t>(half_circle_length(n));
  auto nn = static_cast<std::ptrdiff_t>(n);
  auto c0 = static_cast<std::ptrdiff_t>((cde + n - abc) % n);
  auto e0 = static_cast<std::ptrdiff_t>((efa + n - abc) % n);
  std::array<std::ptrdiff_t, 7> cut{0, e0 + h - nn, c0, h, e0, c0 + h, nn};
  SixArcPartition<T> p;
  p.n = n;
  for (int i = 0; i < 6; ++i) {
    std::ptrdiff_t len = cut[i + 1] - cut[i];
    if (len < 1) throw std::logic_error("half-circles do not form a proper covering triple");
    p.arcs[i] = CycleArc{(abc + static_cast<std::size_t>(cut[i])) % n, static_cast<std::size_t>(len)};
    p.sizes[i] = arc_size(v, p.arcs[i]);
  }
  const auto& L = p.arcs;
  if (L[kA].length != L[kD].length + 1 || L[kC].length != L[kF].length + 1 || L[kE].length != L[kB].length + 1)
    throw std::logic_error("six-arc length relations violated");
  return p;
}

/// The linear-time triple: H (a minimum half-circle, `fixed` if given) plus
/// the realisers of p_l and p_r at the element j of X minimising p_l + p_r
/// among those with both at most p(V). Requires 2 p(V) < |V|.
template <class T>
MinimalTriple<T> find_minimal_triple(std::span<const T> v, std::optional<std::size_t> fixed = std::nullopt) {
  auto table = potential_table(v, fixed);
  return find_minimal_triple(v, table);
}

template <class T>
MinimalTriple<T> find_minimal_triple(std::span<const T> v, const PotentialTable<T>& table) {
  std::size_t n = v.size();
  T total = 0;
  for (const auto& x : v) total += x;
  if (!(table.cycle + table.cycle < total))
    throw std::invalid_argument("minimal triples need p(V) < |V|/2");
  std::size_t m = table.uncovered.length;
  std::optional<std::size_t> best;
  for (std::size_t off = 0; off < m; ++off) {
    if (table.cycle < table.left[off] || table.cycle < table.right[off]) continue;
    if (!best || table.left[off] + table.right[off] < table.left[*best] + table.right[*best]) best = off;
  }
  if (!best) throw std::logic_error("no admissible third point on the uncovered arc");
  MinimalTriple<T> triple;
  triple.starts = {table.min_half_circle, table.left_arg[*best], table.right_arg[*best]};
  for (int i = 0; i < 3; ++i) triple.sizes[i] = table.half_circles[triple.starts[i]];
  triple.partition = partition_from_triple(v, triple.starts[0], triple.starts[1], triple.starts[2]);
  return triple;
}

/// Offset (within the arc) of the first slice with at most half the arc's
/// size strictly before it and at most half strictly after it.
template <class T>
std::size_t median_offset(std::span<const T> arc_values) {
  if (arc_values.empty()) throw std::invalid_argument("median of an empty arc");
  T total = 0;
  for (const auto& x : arc_values) total += x;
  T before = 0;
  for (std::size_t k = 0; k < arc_values.size(); ++k) {
    T after = total - before - arc_values[k];
    if (!(total < before + before) && !(total < after + after)) return k;
    before += arc_values[k];
  }
  throw std::logic_error("no median slice");
}

/// Cycle index of the median slice of `arc` on V.
template <class T>
std::size_t median_slice(std::span<const T> v, const CycleArc& arc) {
  std::vector<T> values;
  values.reserve(arc.length);
  for (std::size_t t = 0; t < arc.length; ++t) values.push_back(v[arc.at(t, v.size())]);
  return arc.at(median_offset(std::span<const T>(values)), v.size());
}

}  // namespace pizza
