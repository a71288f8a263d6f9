#pragma once

// Small simple graphs: a mutable bitset graph for hosts of up to 64
// vertices, and CanonGraph, the isomorphism-invariant form of graphs on at
// most 10 vertices that every enumeration and count in the library is
// keyed by.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pentaflag::graph {

inline constexpr int kMaxCanonOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxHostOrder = 64;

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices, one adjacency bitmask
/// per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }
  void set_edge(int u, int v, bool present);

  /// Subgraph induced on `vertices`, relabelled 0.. in the given order.
  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// A graph on at most 10 vertices stored in canonical labelling: the
/// labelling whose upper-triangle bit string, read in graph6 order
/// (x01, x02, x12, x03, ...), is lexicographically smallest over all
/// vertex permutations. Isomorphic inputs give identical objects.
class CanonGraph {
 public:
  CanonGraph() = default;

  int order() const { return n_; }
  /// The minimal bit string packed MSB-first into C(n,2) low bits.
  std::uint64_t key() const { return key_; }
  /// graph6 encoding of the canonical labelling.
  std::string canon_key() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::uint16_t neighbors(int v) const { return adj_[v]; }
  int edge_count() const;
  Graph to_graph() const;

  friend auto operator<=>(const CanonGraph& a, const CanonGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.key_ <=> b.key_;
  }
  friend bool operator==(const CanonGraph& a, const CanonGraph& b) { return a.n_ == b.n_ && a.key_ == b.key_; }

  /// Rebuilds a CanonGraph from a key produced by key(); the key must be
  /// canonical (checked).
  static CanonGraph from_key(int n, std::uint64_t key);

 private:
  friend CanonGraph canonical_form(const Graph& g);
  int n_ = 0;
  std::uint64_t key_ = 0;
  std::array<std::uint16_t, kMaxCanonOrder> adj_{};
};

/// Ordered part sizes of a complete multipartite graph; all entries >= 1.
struct PartSizes {
  std::vector<int> parts;

  PartSizes() = default;
  explicit PartSizes(std::vector<int> p);
  long total() const;
  int count() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const PartSizes&, const PartSizes&) = default;
};

/// Balanced parts of T_k(n): min(k, n) parts whose sizes differ by <= 1,
/// larger parts first.
PartSizes turan_parts(int k, long n);

// ----------------------------------------------------------- operations

/// Throws std::invalid_argument for more than 10 vertices.
CanonGraph canonical_form(const Graph& g);
CanonGraph canonical_form(int n, std::span<const Edge> edges);

/// All isomorphism classes on n <= 8 vertices, sorted by canonical key.
/// The returned reference stays valid for the life of the process.
const std::vector<CanonGraph>& enumerate_graphs(int n);

/// nu(H, G): number of (not necessarily induced) subgraphs of G
/// isomorphic to H.
std::uint64_t count_subgraphs(const CanonGraph& h, const CanonGraph& g);
std::uint64_t count_subgraphs(const Graph& h, const Graph& g);
/// Edge-preserving injections V(H) -> V(G).
std::uint64_t count_embeddings(const Graph& h, const Graph& g);
std::uint64_t automorphism_count(const Graph& h);

/// Number of |H|-subsets X with G[X] isomorphic to H.
std::uint64_t count_induced(const CanonGraph& h, const CanonGraph& g);

int clique_number(const Graph& g);
int clique_number(const CanonGraph& g);

Graph complete_multipartite_graph(const PartSizes& p);
CanonGraph complete_multipartite(const PartSizes& p);
CanonGraph turan_graph(int k, int n);
bool is_complete_multipartite(const CanonGraph& g);

/// Minimum number of adjacency changes turning G into a graph isomorphic
/// to H. Both must have the same order, at most 8.
int edit_distance(const CanonGraph& g, const CanonGraph& h);

// Common named graphs.
CanonGraph complete_graph(int n);
CanonGraph empty_graph(int n);
CanonGraph cycle_graph(int n);
CanonGraph path_graph(int n);

/// Number of 5-cycles in G, summed over 5-vertex subsets through a
/// precomputed table on induced 5-vertex patterns.
std::uint64_t count_five_cycles(const Graph& g);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace pentaflag::graph
