#include "dmlab/kfk.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmlab/error.hpp"

namespace dmlab {

namespace {

void require_magic(const Graph& g, const CenteredLabeling& lab) {
  if (!verify(g, lab).pass)
    throw PreconditionError("labeling is not a distance magic labeling of the graph");
}

std::string describe(const ZeroAntipodalCycle& c) {
  return "(" + std::to_string(c.v[0]) + "," + std::to_string(c.v[1]) + "," + std::to_string(c.v[2]) +
         "," + std::to_string(c.v[3]) + ")";
}

}  // namespace

std::vector<ZeroAntipodalCycle> find_zero_antipodal_cycles(const Graph& g, const CenteredLabeling& lab) {
  require_magic(g, lab);
  const auto& l = lab.labels;
  std::vector<ZeroAntipodalCycle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex d : g.neighbors(a)) {
        if (d <= b) continue;
        if (l[b] + l[d] != 0) continue;
        for (Vertex c : g.neighbors(b)) {
          if (c <= a || c == d) continue;
          if (!g.has_edge(c, d)) continue;
          if (l[a] + l[c] != 0) continue;
          out.push_back({{a, b, c, d}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Expansion expand(const Graph& g, const CenteredLabeling& lab, const ZeroAntipodalCycle& cycle) {
  if (!is_regular(g, 4)) throw PreconditionError("expand: graph is not tetravalent");
  require_magic(g, lab);
  const auto& c = cycle.v;
  for (Vertex x : c)
    if (x < 0 || x >= g.order()) throw PreconditionError("expand: cycle vertex out of range");
  for (int k = 0; k < 4; ++k)
    for (int j = k + 1; j < 4; ++j)
      if (c[k] == c[j]) throw PreconditionError("expand: cycle vertices are not distinct");
  std::vector<Edge> cycle_edges;
  for (int k = 0; k < 4; ++k) {
    Vertex a = c[k], b = c[(k + 1) % 4];
    if (!g.has_edge(a, b)) throw PreconditionError("expand: " + describe(cycle) + " is not a 4-cycle");
    cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  const auto& l = lab.labels;
  if (l[c[0]] + l[c[2]] != 0 || l[c[1]] + l[c[3]] != 0)
    throw PreconditionError("expand: antipodal labels of " + describe(cycle) + " do not sum to 0");

  const int n = g.order();
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (std::find(cycle_edges.begin(), cycle_edges.end(), e) == cycle_edges.end()) edges.push_back(e);
  for (Vertex x : c) {
    edges.emplace_back(x, n);
    edges.emplace_back(x, n + 1);
  }
  Expansion out{Graph(n + 2, edges), lab};
  out.labeling.labels.push_back(n + 1);
  out.labeling.labels.push_back(-(n + 1));

  if (!is_regular(out.graph, 4) || !verify(out.graph, out.labeling).pass)
    throw std::logic_error("expand: expanded labeling failed verification for cycle " + describe(cycle));
  return out;
}

Expansion expand(const Graph& g, const CenteredLabeling& lab) {
  auto cycles = find_zero_antipodal_cycles(g, lab);
  if (cycles.empty()) throw PreconditionError("expand: no zero-antipodal 4-cycle found");
  return expand(g, lab, cycles.front());
}

}  // namespace dmlab
