#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dmlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the vertices 0..n-1.
///
/// Edges are kept normalized (first < second) and sorted; neighbor lists are
/// sorted ascending. Instances are immutable once constructed.
class Graph {
 public:
  /// Throws PreconditionError on loops, repeated edges, out-of-range
  /// endpoints or n < 1.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

bool is_regular(const Graph& g, int valency);
bool is_connected(const Graph& g);

/// graph6 short form, n <= 62.
inline constexpr int kGraph6MaxOrder = 62;

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Byte string identifying the isomorphism class of a graph.
///
/// Computed by colour refinement plus individualization, keeping the
/// lexicographically least relabeled adjacency matrix over all leaves of the
/// search tree. Automorphisms discovered at leaves prune sibling branches.
/// Guaranteed for n <= kCertificateMaxOrder.
using CanonicalCertificate = std::string;
inline constexpr int kCertificateMaxOrder = 20;

CanonicalCertificate canonical_certificate(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace dmlab
