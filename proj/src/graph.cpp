#include "dmlab/graph.hpp"

#include <algorithm>
#include <numeric>

#include "dmlab/error.hpp"

namespace dmlab {

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 1) throw PreconditionError("graph order must be at least 1");
  adj_.resize(order);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} has an endpoint outside 0.." + std::to_string(order - 1));
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw PreconditionError("repeated edge {" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + "}");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw PreconditionError("permutation size does not match graph order");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [u, v] : edges_) out.emplace_back(perm[u], perm[v]);
  return Graph(order(), out);
}

bool is_regular(const Graph& g, int valency) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != valency) return false;
  return true;
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.order();
}

// graph6 ---------------------------------------------------------------------

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line");
  for (char c : line) {
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of range (code " +
                       std::to_string(static_cast<unsigned char>(c)) + ")");
  }
  if (line[0] == 126) throw ParseError("graph6: long-form orders (n > 62) are not supported");
  const int n = line[0] - 63;
  if (n < 1) throw ParseError("graph6: order must be at least 1");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected)
    throw ParseError("graph6: length prefix says n=" + std::to_string(n) + ", which needs " +
                     std::to_string(expected) + " characters, got " + std::to_string(line.size()));

  auto bit = [&](std::size_t k) {
    const int group = line[1 + k / 6] - 63;
    return (group >> (5 - k % 6)) & 1;
  };
  for (std::size_t k = bits; k < (expected - 1) * 6; ++k)
    if (bit(k)) throw ParseError("graph6: nonzero padding bits");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bit(k)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw RangeError("graph6: order " + std::to_string(n) + " exceeds the short form limit of " +
                     std::to_string(kGraph6MaxOrder));
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// Canonical certificate ------------------------------------------------------

namespace {

using Colouring = std::vector<int>;
using Perm = std::vector<Vertex>;

// Refines to the coarsest equitable colouring finer than `colour`. New colours
// are ranks of (old colour, sorted neighbour colours), so cell order is
// preserved and the result commutes with vertex relabeling.
void refine(const Graph& g, Colouring& colour) {
  const int n = g.order();
  int cells = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colour[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(colour[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    Colouring next(n);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
      next[order[k]] = rank;
    }
    colour.swap(next);
    if (rank + 1 == cells) return;
    cells = rank + 1;
  }
}

class CertificateSearch {
 public:
  explicit CertificateSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalCertificate run() {
    Colouring colour(n_, 0);
    std::vector<Vertex> prefix;
    descend(colour, prefix);
    return best_cert_;
  }

 private:
  static constexpr std::size_t kMaxGenerators = 256;

  std::string leaf_certificate(const Perm& perm) const {
    // perm[v] is the new index of v. Pack the relabeled upper triangle.
    std::vector<std::vector<char>> m(n_, std::vector<char>(n_, 0));
    for (auto [u, v] : g_.edges()) {
      m[perm[u]][perm[v]] = 1;
      m[perm[v]][perm[u]] = 1;
    }
    std::string out;
    out.push_back(static_cast<char>(n_));
    int acc = 0, filled = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | m[i][j];
        if (++filled == 8) {
          out.push_back(static_cast<char>(acc));
          acc = filled = 0;
        }
      }
    if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
  }

  void record_automorphism(const Perm& leaf, const Perm& reference) {
    if (generators_.size() >= kMaxGenerators) return;
    // reference^{-1} o leaf
    Perm inv(n_);
    for (Vertex v = 0; v < n_; ++v) inv[reference[v]] = v;
    Perm gamma(n_);
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      gamma[v] = inv[leaf[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  void visit_leaf(const Colouring& colour) {
    Perm perm(colour.begin(), colour.end());
    std::string cert = leaf_certificate(perm);
    if (!have_best_) {
      have_best_ = true;
      best_cert_ = std::move(cert);
      best_perm_ = perm;
      first_cert_ = best_cert_;
      first_perm_ = perm;
      return;
    }
    if (cert == first_cert_) record_automorphism(perm, first_perm_);
    if (cert == best_cert_) {
      if (best_perm_ != first_perm_) record_automorphism(perm, best_perm_);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_perm_ = std::move(perm);
    }
  }

  // Orbit representative of `v` under the automorphisms that fix `prefix`.
  Vertex orbit_root(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = orbit_root(parent, v), b = orbit_root(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = orbit_root(parent, v);
    return parent;
  }

  void descend(Colouring colour, std::vector<Vertex>& prefix) {
    refine(g_, colour);
    std::vector<int> cell_size(n_, 0);
    for (int c : colour) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      visit_leaf(colour);
      return;
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v)
      if (colour[v] == target) cell.push_back(v);

    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty()) {
        auto orbits = stabilizer_orbits(prefix);
        bool covered = std::any_of(explored.begin(), explored.end(),
                                   [&](Vertex e) { return orbits[e] == orbits[v]; });
        if (covered) continue;
      }
      Colouring child(colour);
      for (Vertex w = 0; w < n_; ++w) {
        if (colour[w] > target) ++child[w];
        else if (colour[w] == target && w != v) child[w] = target + 1;
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  const int n_;
  bool have_best_ = false;
  std::string best_cert_, first_cert_;
  Perm best_perm_, first_perm_;
  std::vector<Perm> generators_;
};

}  // namespace

CanonicalCertificate canonical_certificate(const Graph& g) {
  if (g.order() > kCertificateMaxOrder)
    throw RangeError("canonical_certificate: order " + std::to_string(g.order()) +
                     " exceeds the supported bound of " + std::to_string(kCertificateMaxOrder));
  return CertificateSearch(g).run();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace dmlab
