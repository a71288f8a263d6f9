#include "pentaflag/graph.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "pentaflag/canon.hpp"
#include "pentaflag/graph6.hpp"

namespace pentaflag::graph {

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) {
  if (n < 0 || n > kMaxHostOrder) throw std::invalid_argument("graph order must be in [0, 64]");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

int Graph::edge_count() const {
  int total = 0;
  for (auto r : rows_) total += std::popcount(r);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int j = 1; j < order(); ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

void Graph::set_edge(int u, int v, bool present) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  const std::uint64_t bu = std::uint64_t{1} << u;
  const std::uint64_t bv = std::uint64_t{1} << v;
  if (present) {
    rows_[u] |= bv;
    rows_[v] |= bu;
  } else {
    rows_[u] &= ~bv;
    rows_[v] &= ~bu;
  }
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t j = 1; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::complement() const {
  Graph h(order());
  for (int j = 1; j < order(); ++j)
    for (int i = 0; i < j; ++i)
      if (!adjacent(i, j)) h.add_edge(i, j);
  return h;
}

// ---------------------------------------------------- canonical search

namespace detail {

std::uint64_t key_of(const SmallAdjacency& adj, int n) {
  std::uint64_t key = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) key = (key << 1) | ((adj[i] >> j) & 1U);
  return key;
}

SmallAdjacency adjacency_from_key(int n, std::uint64_t key) {
  SmallAdjacency adj{};
  int t = pair_bits(n) - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --t) {
      if ((key >> t) & 1U) {
        adj[i] |= static_cast<std::uint16_t>(1U << j);
        adj[j] |= static_cast<std::uint16_t>(1U << i);
      }
    }
  }
  return adj;
}

Labelling minimal_labelling(const SmallAdjacency& adj, int n, int fixed) {
  struct Node {
    std::array<std::uint8_t, kMaxCanonOrder> perm;
    std::uint16_t used;
  };

  // twin_rep[v]: smallest free vertex u with N(u)\{v} == N(v)\{u}.
  std::array<int, kMaxCanonOrder> twin_rep{};
  for (int v = 0; v < n; ++v) {
    twin_rep[v] = v;
    if (v < fixed) continue;
    for (int u = fixed; u < v; ++u) {
      const std::uint16_t mask = static_cast<std::uint16_t>(~((1U << u) | (1U << v)));
      if ((adj[u] & mask) == (adj[v] & mask)) {
        twin_rep[v] = twin_rep[u];
        break;
      }
    }
  }

  Node root{};
  root.used = 0;
  std::uint64_t prefix = 0;
  for (int i = 0; i < fixed; ++i) {
    root.perm[i] = static_cast<std::uint8_t>(i);
    root.used |= static_cast<std::uint16_t>(1U << i);
  }
  for (int j = 1; j < fixed; ++j)
    for (int i = 0; i < j; ++i) prefix = (prefix << 1) | ((adj[i] >> j) & 1U);

  std::vector<Node> frontier{root};
  std::vector<Node> next;
  for (int pos = fixed; pos < n; ++pos) {
    next.clear();
    std::uint64_t best = ~std::uint64_t{0};
    for (const Node& node : frontier) {
      std::uint16_t seen_reps = 0;
      for (int v = 0; v < n; ++v) {
        if ((node.used >> v) & 1U) continue;
        const int rep = twin_rep[v];
        if ((seen_reps >> rep) & 1U) continue;
        seen_reps |= static_cast<std::uint16_t>(1U << rep);
        std::uint64_t col = 0;
        for (int i = 0; i < pos; ++i) col = (col << 1) | ((adj[node.perm[i]] >> v) & 1U);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        Node child = node;
        child.perm[pos] = static_cast<std::uint8_t>(v);
        child.used |= static_cast<std::uint16_t>(1U << v);
        next.push_back(child);
      }
    }
    prefix = (prefix << pos) | (pos > 0 ? best : 0);
    std::swap(frontier, next);
  }
  return {prefix, frontier.front().perm};
}

}  // namespace detail

// ----------------------------------------------------------- CanonGraph

std::string CanonGraph::canon_key() const { return graph6::encode(to_graph()); }

int CanonGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

Graph CanonGraph::to_graph() const {
  Graph g(n_);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) g.add_edge(i, j);
  return g;
}

CanonGraph CanonGraph::from_key(int n, std::uint64_t key) {
  if (n < 0 || n > kMaxCanonOrder) throw std::invalid_argument("CanonGraph order must be in [0, 10]");
  const auto adj = detail::adjacency_from_key(n, key);
  if (detail::minimal_labelling(adj, n).key != key) throw std::invalid_argument("key is not canonical");
  CanonGraph g;
  g.n_ = n;
  g.key_ = key;
  g.adj_ = adj;
  return g;
}

CanonGraph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonOrder) throw std::invalid_argument("canonical_form supports at most 10 vertices");
  detail::SmallAdjacency adj{};
  for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint16_t>(g.neighbors(v));
  const auto lab = detail::minimal_labelling(adj, n);
  CanonGraph out;
  out.n_ = n;
  out.key_ = lab.key;
  out.adj_ = detail::adjacency_from_key(n, lab.key);
  return out;
}

CanonGraph canonical_form(int n, std::span<const Edge> edges) { return canonical_form(Graph::from_edges(n, edges)); }

// ------------------------------------------------------------ PartSizes

PartSizes::PartSizes(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("part sizes must be positive");
}

long PartSizes::total() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

PartSizes turan_parts(int k, long n) {
  if (k < 1) throw std::invalid_argument("turan_parts needs k >= 1");
  if (n < 0) throw std::invalid_argument("turan_parts needs n >= 0");
  const long parts = std::min<long>(k, n);
  std::vector<int> sizes;
  for (long i = 0; i < parts; ++i) sizes.push_back(static_cast<int>(n / parts + (i < n % parts ? 1 : 0)));
  return PartSizes(std::move(sizes));
}

// ---------------------------------------------------------- enumeration

const std::vector<CanonGraph>& enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) throw std::invalid_argument("enumerate_graphs supports 0 <= n <= 8");
  static std::mutex mutex;
  static std::array<std::vector<CanonGraph>, kMaxEnumerationOrder + 1> cache;
  static std::array<bool, kMaxEnumerationOrder + 1> ready{};

  std::lock_guard lock(mutex);
  if (!ready[0]) {
    cache[0] = {canonical_form(Graph(0))};
    ready[0] = true;
  }
  for (int m = 1; m <= n; ++m) {
    if (ready[m]) continue;
    std::unordered_set<std::uint64_t> seen;
    std::vector<CanonGraph> out;
    for (const CanonGraph& base : cache[m - 1]) {
      Graph g(m);
      for (int j = 1; j < m - 1; ++j)
        for (int i = 0; i < j; ++i)
          if (base.adjacent(i, j)) g.add_edge(i, j);
      for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
        for (int i = 0; i < m - 1; ++i) g.set_edge(i, m - 1, (mask >> i) & 1U);
        CanonGraph c = canonical_form(g);
        if (seen.insert(c.key()).second) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    cache[m] = std::move(out);
    ready[m] = true;
  }
  return cache[n];
}

// -------------------------------------------------------------- counting

namespace {

// Order H's vertices so each one (after the first of its component) has
// an earlier neighbour whenever possible.
std::vector<int> search_order(const Graph& h) {
  const int n = h.order();
  std::vector<int> order;
  std::uint64_t placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    int best_score = -1;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const int score = std::popcount(h.neighbors(v) & placed) * 64 + h.degree(v);
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }
  return order;
}

std::uint64_t extend(const Graph& h, const Graph& g, const std::vector<int>& order, std::vector<int>& image,
                     std::size_t pos, std::uint64_t used) {
  if (pos == order.size()) return 1;
  const int v = order[pos];
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
  std::uint64_t candidates = all & ~used;
  for (std::size_t i = 0; i < pos; ++i)
    if (h.adjacent(v, order[i])) candidates &= g.neighbors(image[order[i]]);
  std::uint64_t total = 0;
  while (candidates) {
    const int w = std::countr_zero(candidates);
    candidates &= candidates - 1;
    image[v] = w;
    total += extend(h, g, order, image, pos + 1, used | (std::uint64_t{1} << w));
  }
  return total;
}

}  // namespace

std::uint64_t count_embeddings(const Graph& h, const Graph& g) {
  if (h.order() > g.order()) return 0;
  const auto order = search_order(h);
  std::vector<int> image(static_cast<std::size_t>(h.order()), -1);
  return extend(h, g, order, image, 0, 0);
}

std::uint64_t automorphism_count(const Graph& h) { return count_embeddings(h, h); }

std::uint64_t count_subgraphs(const Graph& h, const Graph& g) { return count_embeddings(h, g) / automorphism_count(h); }

std::uint64_t count_subgraphs(const CanonGraph& h, const CanonGraph& g) {
  return count_subgraphs(h.to_graph(), g.to_graph());
}

std::uint64_t count_induced(const CanonGraph& h, const CanonGraph& g) {
  const int m = h.order();
  const int n = g.order();
  if (m > n) return 0;
  std::vector<int> subset(static_cast<std::size_t>(m));
  std::iota(subset.begin(), subset.end(), 0);
  const Graph host = g.to_graph();
  std::uint64_t count = 0;
  for (;;) {
    if (canonical_form(host.induced(subset)) == h) ++count;
    int i = m - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

namespace {

int max_clique(const Graph& g, std::uint64_t candidates, int size) {
  if (!candidates) return size;
  int best = size;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) break;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = std::max(best, max_clique(g, candidates & g.neighbors(v), size + 1));
  }
  return best;
}

}  // namespace

int clique_number(const Graph& g) {
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
  return max_clique(g, all, 0);
}

int clique_number(const CanonGraph& g) { return clique_number(g.to_graph()); }

Graph complete_multipartite_graph(const PartSizes& p) {
  const long n = p.total();
  if (n > kMaxHostOrder) throw std::invalid_argument("complete multipartite graph larger than 64 vertices");
  Graph g(static_cast<int>(n));
  std::vector<int> part_of;
  for (int i = 0; i < p.count(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(p.parts[i]), i);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
  return g;
}

CanonGraph complete_multipartite(const PartSizes& p) { return canonical_form(complete_multipartite_graph(p)); }

CanonGraph turan_graph(int k, int n) { return complete_multipartite(turan_parts(k, n)); }

bool is_complete_multipartite(const CanonGraph& g) {
  // Non-adjacency must be transitive: the complement is a union of cliques.
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      for (int w = 0; w < n; ++w)
        if (w != u && w != v && !g.adjacent(v, w) && g.adjacent(u, w)) return false;
    }
  return true;
}

int edit_distance(const CanonGraph& g, const CanonGraph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("edit_distance needs graphs of equal order");
  if (g.order() > kMaxEnumerationOrder) throw std::invalid_argument("edit_distance supports at most 8 vertices");
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n * (n - 1) / 2;
  do {
    int diff = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (g.adjacent(i, j) != h.adjacent(perm[i], perm[j])) ++diff;
    best = std::min(best, diff);
  } while (best > 0 && std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CanonGraph complete_graph(int n) { return canonical_form(Graph(n).complement()); }

CanonGraph empty_graph(int n) { return canonical_form(Graph(n)); }

CanonGraph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return canonical_form(g);
}

CanonGraph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return canonical_form(g);
}

namespace {

// Pair index inside a 5-vertex pattern: (i, j), i < j, in graph6 order.
constexpr int five_pair(int i, int j) { return j * (j - 1) / 2 + i; }

std::array<std::uint8_t, 1024> build_five_cycle_table() {
  std::array<std::uint8_t, 1024> table{};
  std::array<int, 4> rest{1, 2, 3, 4};
  std::vector<std::uint16_t> cycles;
  do {
    if (rest[0] > rest[3]) continue;  // each cycle once per orientation
    const std::array<int, 5> cyc{0, rest[0], rest[1], rest[2], rest[3]};
    std::uint16_t mask = 0;
    for (int t = 0; t < 5; ++t) {
      const int a = std::min(cyc[t], cyc[(t + 1) % 5]);
      const int b = std::max(cyc[t], cyc[(t + 1) % 5]);
      mask |= static_cast<std::uint16_t>(1U << five_pair(a, b));
    }
    cycles.push_back(mask);
  } while (std::next_permutation(rest.begin(), rest.end()));
  for (std::uint32_t pattern = 0; pattern < 1024; ++pattern)
    for (auto c : cycles)
      if ((pattern & c) == c) ++table[pattern];
  return table;
}

}  // namespace

std::uint64_t count_five_cycles(const Graph& g) {
  static const auto table = build_five_cycle_table();
  const int n = g.order();
  std::uint64_t total = 0;
  std::array<int, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            std::uint32_t pattern = 0;
            for (int j = 1; j < 5; ++j)
              for (int i = 0; i < j; ++i)
                if (g.adjacent(s[i], s[j])) pattern |= 1U << five_pair(i, j);
            total += table[pattern];
          }
  return total;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace pentaflag::graph
