#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pentaflag/graph.hpp"
#include "pentaflag/graph6.hpp"

using namespace pentaflag::graph;

namespace {

// Oracle: minimum upper-triangle string over every permutation.
std::uint64_t brute_canon(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((mask >> t) & 1U) g.add_edge(i, j);
  return g;
}

std::size_t brute_class_count(int n) {
  std::set<std::uint64_t> keys;
  const int bits = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) keys.insert(brute_canon(graph_from_mask(n, m)));
  return keys.size();
}

// Oracle: count 5-cycles as cyclic vertex sequences up to rotation and reflection.
std::uint64_t brute_c5(const Graph& g) {
  const int n = g.order();
  std::uint64_t closed = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            const int v[5] = {a, b, c, d, e};
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i)
              for (int j = i + 1; j < 5 && ok; ++j) ok = v[i] != v[j];
            for (int i = 0; i < 5 && ok; ++i) ok = g.adjacent(v[i], v[(i + 1) % 5]);
            if (ok) ++closed;
          }
  return closed / 10;
}

}  // namespace

TEST_CASE("canonical form agrees with the permutation oracle") {
  for (int n = 0; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
      const Graph g = graph_from_mask(n, m);
      CHECK(canonical_form(g).key() == brute_canon(g));
    }
  }
  std::mt19937_64 rng(7);
  for (int n = 6; n <= 8; ++n)
    for (int rep = 0; rep < 200; ++rep) {
      const Graph g = graph_from_mask(n, rng());
      CHECK(canonical_form(g).key() == brute_canon(g));
    }
}

TEST_CASE("relabelling does not change the canonical form") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n)
    for (int rep = 0; rep < 50; ++rep) {
      const Graph g = graph_from_mask(n, rng());
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(g) == canonical_form(g.induced(perm)));
    }
}

TEST_CASE("3-path and triangle labellings") {
  const std::vector<Edge> p1{{0, 1}, {1, 2}}, p2{{0, 2}, {2, 1}}, p3{{1, 0}, {0, 2}};
  CHECK(canonical_form(3, p1) == canonical_form(3, p2));
  CHECK(canonical_form(3, p1) == canonical_form(3, p3));
  const std::vector<Edge> t1{{0, 1}, {1, 2}, {0, 2}}, t2{{0, 2}, {0, 1}, {1, 2}};
  CHECK(canonical_form(3, t1) == canonical_form(3, t2));
}

TEST_CASE("class counts match brute force") {
  CHECK(enumerate_graphs(3).size() == brute_class_count(3));
  CHECK(enumerate_graphs(4).size() == brute_class_count(4));
  CHECK(enumerate_graphs(5).size() == brute_class_count(5));
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
  const auto& five = enumerate_graphs(5);
  CHECK(std::is_sorted(five.begin(), five.end()));
  std::set<std::string> keys;
  for (const auto& g : five) keys.insert(g.canon_key());
  CHECK(keys.size() == 34);
}

TEST_CASE("canonical_form rejects more than ten vertices") {
  CHECK_THROWS_AS(canonical_form(Graph(11)), std::invalid_argument);
}

TEST_CASE("subgraph counts") {
  const auto c5 = cycle_graph(5);
  CHECK(count_subgraphs(c5, complete_graph(5)) == 12);
  CHECK(count_subgraphs(c5, c5) == 1);
  CHECK(count_subgraphs(c5, complete_multipartite(PartSizes({2, 2, 1}))) == 4);
  for (const auto& g : enumerate_graphs(6)) {
    CHECK(count_subgraphs(c5, g) == brute_c5(g.to_graph()));
    CHECK(count_five_cycles(g.to_graph()) == brute_c5(g.to_graph()));
  }
}

TEST_CASE("induced counts sum to binomials") {
  for (int m = 5; m <= 7; ++m) {
    std::mt19937_64 rng(static_cast<unsigned>(m));
    for (int rep = 0; rep < 5; ++rep) {
      const auto g = canonical_form(graph_from_mask(m, rng()));
      for (int n = 2; n <= 4; ++n) {
        std::uint64_t total = 0;
        for (const auto& h : enumerate_graphs(n)) total += count_induced(h, g);
        CHECK(total == binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)));
      }
    }
  }
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  CHECK(count_induced(complete_graph(2), canonical_form(3, p3)) == 2);
}

TEST_CASE("clique numbers") {
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(complete_multipartite(PartSizes({2, 2, 1}))) == 3);
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(empty_graph(4)) == 1);
  CHECK(clique_number(empty_graph(0)) == 0);
}

TEST_CASE("multipartite constructions") {
  CHECK(complete_multipartite(PartSizes({1, 1, 1, 1, 1})) == complete_graph(5));
  CHECK(complete_multipartite(PartSizes({5})) == empty_graph(5));
  const auto t36 = turan_graph(3, 6);
  CHECK(t36.edge_count() == 12);
  CHECK(t36 == complete_multipartite(PartSizes({2, 2, 2})));
  CHECK(turan_parts(3, 7) == PartSizes({3, 2, 2}));
  CHECK(turan_parts(5, 3) == PartSizes({1, 1, 1}));
  CHECK_THROWS_AS(PartSizes({2, 0}), std::invalid_argument);
  int multipartite = 0;
  for (const auto& g : enumerate_graphs(5)) multipartite += is_complete_multipartite(g) ? 1 : 0;
  CHECK(multipartite == 7);
}

TEST_CASE("edit distance") {
  CHECK(edit_distance(cycle_graph(5), cycle_graph(5)) == 0);
  CHECK(edit_distance(complete_graph(3), empty_graph(3)) == 3);
  CHECK(edit_distance(cycle_graph(5), complete_graph(5)) == 5);
  CHECK(edit_distance(path_graph(4), cycle_graph(4)) == 1);
  CHECK_THROWS_AS(edit_distance(cycle_graph(5), complete_graph(4)), std::invalid_argument);
}

TEST_CASE("graph6 round trip and known strings") {
  CHECK(pentaflag::graph6::encode(complete_graph(5).to_graph()) == "D~{");
  CHECK(pentaflag::graph6::decode(">>graph6<<D~{\n") == complete_graph(5).to_graph());
  CHECK(pentaflag::graph6::encode(Graph(0)) == "?");
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 7, 12, 40, 63, 64}) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() & 1U) g.add_edge(i, j);
    CHECK(pentaflag::graph6::decode(pentaflag::graph6::encode(g)) == g);
  }
  CHECK(pentaflag::graph6::encode(Graph(63)).substr(0, 4) == "~??~");
  CHECK_THROWS_AS(pentaflag::graph6::decode("D~"), std::invalid_argument);
  CHECK_THROWS_AS(pentaflag::graph6::decode("A@"), std::invalid_argument);  // padding bit set
  CHECK_THROWS_AS(pentaflag::graph6::decode(""), std::invalid_argument);
}
