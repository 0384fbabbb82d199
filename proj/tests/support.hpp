// Test-only helpers: random instances, profile generators and brute-force
// oracles that do not share code paths with the library.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "dmlab/graph.hpp"
#include "dmlab/labeling.hpp"
#include "dmlab/qw.hpp"

namespace dmlab::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Graph random_graph(int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng())) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// K_{2,2,2} with parts {0,1}, {2,3}, {4,5}.
inline Graph octahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (i / 2 != j / 2) edges.emplace_back(i, j);
  return Graph(6, edges);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

/// All compositions of any total in [3, max_total] into at most max_parts
/// parts drawn from `parts`.
inline void for_each_profile(const std::vector<int>& parts, int max_parts, int max_total,
                             const std::function<void(const SegmentProfile&)>& fn) {
  SegmentProfile cur;
  std::function<void(int)> rec = [&](int total) {
    if (total >= 3) fn(cur);
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int a : parts) {
      if (total + a > max_total) continue;
      cur.push_back(a);
      rec(total + a);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Random profile with odd parts >= 3 and an even number of parts = 1 mod 4.
inline SegmentProfile random_dm_profile(int max_m) {
  while (true) {
    SegmentProfile p;
    int total = 0;
    while (true) {
      int a = 2 * uniform(1, std::max(1, std::min(40, max_m / 2))) + 1;
      if (total + a > max_m) break;
      p.push_back(a);
      total += a;
      if (uniform(0, 3) == 0) break;
    }
    if (p.empty()) continue;
    int b = 0;
    for (int a : p) b += a % 4 == 1;
    if (b % 2 == 0) return p;
  }
}

/// Brute force over all n! bijections onto N; counts zero-weight labelings.
inline std::uint64_t brute_force_count(const Graph& g) {
  const int n = g.order();
  std::vector<Label> labels;
  for (int k = 0; k < n; ++k) labels.push_back(1 - n + 2 * k);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      Label w = 0;
      for (Vertex u : g.neighbors(v)) w += labels[u];
      ok = w == 0;
    }
    count += ok;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

/// Isomorphism by trying every bijection; only for tiny graphs.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.relabeled(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool has_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      for (Vertex c = b + 1; c < g.order(); ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return true;
  return false;
}

}  // namespace dmlab::testing
