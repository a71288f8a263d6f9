#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "pentaflag/flag.hpp"

using namespace pentaflag;
using namespace pentaflag::flag;
using symbolic::Rational;

namespace {

// Oracle: label-preserving isomorphism by trying every bijection of the
// unlabelled vertices.
bool brute_flag_iso(const Graph& g1, const std::vector<int>& l1, const Graph& g2, const std::vector<int>& l2) {
  const int n = g1.order();
  if (n != g2.order() || l1.size() != l2.size()) return false;
  std::vector<int> free1, free2;
  for (int v = 0; v < n; ++v) {
    if (std::find(l1.begin(), l1.end(), v) == l1.end()) free1.push_back(v);
    if (std::find(l2.begin(), l2.end(), v) == l2.end()) free2.push_back(v);
  }
  std::vector<int> map(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < l1.size(); ++i) map[l1[i]] = l2[i];
  std::sort(free2.begin(), free2.end());
  do {
    for (std::size_t i = 0; i < free1.size(); ++i) map[free1[i]] = free2[i];
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g1.adjacent(u, v) == g2.adjacent(map[u], map[v]);
    if (ok) return true;
  } while (std::next_permutation(free2.begin(), free2.end()));
  return false;
}

std::vector<std::vector<int>> subsets(const std::vector<int>& pool, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = i; j < pool.size(); ++j) {
      cur.push_back(pool[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Oracle: P(F1, F2; G) by explicit disjoint subset pairs and brute iso.
Rational brute_pair_density(const TypedFlag& f1, const TypedFlag& f2, const Graph& g, const std::vector<int>& labels) {
  const int s = static_cast<int>(labels.size());
  std::vector<int> free;
  for (int v = 0; v < g.order(); ++v)
    if (std::find(labels.begin(), labels.end(), v) == labels.end()) free.push_back(v);
  std::vector<int> lab(static_cast<std::size_t>(s));
  std::iota(lab.begin(), lab.end(), 0);
  long hits = 0, total = 0;
  for (const auto& x1 : subsets(free, f1.order() - s)) {
    std::vector<int> rest;
    for (int v : free)
      if (std::find(x1.begin(), x1.end(), v) == x1.end()) rest.push_back(v);
    for (const auto& x2 : subsets(rest, f2.order() - s)) {
      ++total;
      std::vector<int> v1(labels), v2(labels);
      v1.insert(v1.end(), x1.begin(), x1.end());
      v2.insert(v2.end(), x2.begin(), x2.end());
      if (brute_flag_iso(g.induced(v1), lab, f1.to_graph(), lab) && brute_flag_iso(g.induced(v2), lab, f2.to_graph(), lab))
        ++hits;
    }
  }
  Rational r(hits, total);
  r.canonicalize();
  return r;
}

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

TypeSigma vertex_type() { return enumerate_types(1).front(); }

}  // namespace

TEST_CASE("type and flag counts") {
  CHECK(enumerate_types(0).size() == 1);
  CHECK(enumerate_types(1).size() == 1);
  CHECK(enumerate_types(2).size() == 2);
  CHECK(enumerate_types(3).size() == 4);
  CHECK(enumerate_flags(vertex_type(), 2).size() == 2);
  CHECK(enumerate_flags(TypeSigma::empty(), 5).size() == 34);
  for (const auto& sigma : enumerate_types(3)) CHECK(enumerate_flags(sigma, 4).size() == 8);
}

TEST_CASE("flag classes agree with the brute-force isomorphism oracle") {
  for (int s = 0; s <= 3; ++s)
    for (const auto& sigma : enumerate_types(s)) {
      const auto& flags = enumerate_flags(sigma, s + 2);
      std::vector<int> lab(static_cast<std::size_t>(s));
      std::iota(lab.begin(), lab.end(), 0);
      for (std::size_t a = 0; a < flags.size(); ++a)
        for (std::size_t b = 0; b < flags.size(); ++b)
          CHECK(brute_flag_iso(flags[a].to_graph(), lab, flags[b].to_graph(), lab) == (a == b));
    }
  std::mt19937 rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    Graph g(6);
    for (int j = 1; j < 6; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() & 1U) g.add_edge(i, j);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::vector<int> labels{perm[0], perm[1]};
    const TypedFlag f = TypedFlag::make(g, labels);
    CHECK(brute_flag_iso(g, labels, f.to_graph(), {0, 1}));
  }
}

TEST_CASE("serialisation") {
  const Graph p = path3();
  const std::vector<int> center{1};
  const TypedFlag f = TypedFlag::make(p, center);
  CHECK(TypedFlag::parse(f.serialize()) == f);
  CHECK(f.serialize().find("|θ:0") != std::string::npos);
  CHECK(TypedFlag::parse("Bg|θ:1") == f);
  CHECK(TypedFlag::parse("Bg|θ:0") != f);
  CHECK_THROWS_AS(TypedFlag::parse("Bw"), std::invalid_argument);
  CHECK_THROWS_AS(TypedFlag::parse("Bw|θ:0,"), std::invalid_argument);
  CHECK_THROWS_AS(TypedFlag::parse("Bw|θ:0,0"), std::invalid_argument);
}

TEST_CASE("flag densities") {
  const Graph p = path3();
  const std::vector<int> end{0}, center{1};
  Graph k2(2);
  k2.add_edge(0, 1);
  const std::vector<int> first{0};
  const TypedFlag edge = TypedFlag::make(k2, first);
  CHECK(flag_density(edge, edge) == 1);
  CHECK(flag_density(edge, TypedFlag::make(p, center)) == 1);
  CHECK(flag_density(edge, TypedFlag::make(p, end)) == Rational(1, 2));
  CHECK(flag_density(TypedFlag::unlabelled(graph::complete_graph(2)), TypedFlag::unlabelled(graph::canonical_form(p))) ==
        Rational(2, 3));
  const TypedFlag sigma_only = TypedFlag::make(Graph(1), first);
  CHECK(pair_density(sigma_only, sigma_only, edge) == 1);
  CHECK_THROWS_AS(flag_density(TypedFlag::unlabelled(graph::complete_graph(2)), edge), std::invalid_argument);
}

TEST_CASE("pair densities agree with the brute-force oracle") {
  std::mt19937 rng(4);
  for (int s = 0; s <= 3; ++s)
    for (const auto& sigma : enumerate_types(s)) {
      const auto& small = enumerate_flags(sigma, std::min(s + 1, 4));
      for (const auto& host : enumerate_flags(sigma, std::min(s + 3, 6))) {
        if (rng() % 4) continue;
        std::vector<int> labels(static_cast<std::size_t>(s));
        std::iota(labels.begin(), labels.end(), 0);
        for (const auto& f1 : small)
          for (const auto& f2 : small) {
            CHECK(pair_density(f1, f2, host) == brute_pair_density(f1, f2, host.to_graph(), labels));
            CHECK(pair_density(f1, f2, host) == pair_density(f2, f1, host));
          }
      }
    }
}

TEST_CASE("products") {
  const TypedFlag k2 = TypedFlag::unlabelled(graph::complete_graph(2));
  const FlagVector v = product_expand(k2, k2);
  CHECK(v.order() == 4);
  Graph matching(4);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  CHECK(v[TypedFlag::unlabelled(graph::canonical_form(matching))] == RationalFunction(Rational(1, 3)));
  CHECK(v[TypedFlag::unlabelled(graph::complete_graph(4))] == RationalFunction(1));

  // A flag with no free vertices acts as the identity.
  const std::vector<int> first{0};
  const TypedFlag sigma_only = TypedFlag::make(Graph(1), first);
  for (const auto& f : enumerate_flags(vertex_type(), 3)) {
    const FlagVector id = product_expand(sigma_only, f);
    CHECK(id.terms().size() == 1);
    CHECK(id[f] == RationalFunction(1));
  }

  // Triangle type, pendant flags: two-pendant flag gets a positive share.
  const TypeSigma tri = TypeSigma::canonical(graph::complete_graph(3));
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  const std::vector<int> labels{0, 1, 2};
  const TypedFlag pendant = TypedFlag::make(g, labels);
  Graph h(5);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(1, 2);
  h.add_edge(0, 3);
  h.add_edge(0, 4);
  const TypedFlag two = TypedFlag::make(h, labels);
  CHECK(two.type() == tri);
  CHECK(product_expand(pendant, pendant)[two] == RationalFunction(1));
}

TEST_CASE("unlabelling factors") {
  const Graph p = path3();
  const std::vector<int> end{0}, center{1};
  Graph k2(2);
  k2.add_edge(0, 1);
  const std::vector<int> first{0};
  CHECK(unlabel_factor(TypedFlag::make(k2, first)) == 1);
  CHECK(unlabel_factor(TypedFlag::make(p, center)) == Rational(1, 3));
  CHECK(unlabel_factor(TypedFlag::make(p, end)) == Rational(2, 3));
}

TEST_CASE("unlabelling partitions the injections") {
  for (int s = 1; s <= 3; ++s)
    for (int n = s; n <= 5; ++n)
      for (const auto& h : graph::enumerate_graphs(n)) {
        Rational total = 0;
        for (std::uint64_t bits = 0; bits < (1U << (s * (s - 1) / 2)); ++bits)
          for (const auto& f : enumerate_flags(TypeSigma::from_bits(s, bits), n))
            if (f.underlying() == h) total += unlabel_factor(f);
        INFO("s=" << s << " n=" << n << " h=" << h.canon_key());
        CHECK(total == 1);
      }
}

TEST_CASE("square expansion matches the averaged pair-density oracle") {
  // [[Fa.Fb]] at H equals the mean over labellings theta of P(Fa, Fb; (H, theta)).
  for (const auto& sigma : enumerate_types(3)) {
    const auto& flags = enumerate_flags(sigma, 4);
    for (std::size_t a = 0; a < flags.size(); a += 3)
      for (std::size_t b = 0; b < flags.size(); b += 2) {
        const std::vector<std::pair<RationalFunction, TypedFlag>> one{{RationalFunction(1), flags[a]}};
        const FlagVector prod = unlabel(product_expand(flags[a], flags[b]));
        for (const auto& h : graph::enumerate_graphs(5)) {
          const Graph hg = h.to_graph();
          Rational sum = 0;
          long injections = 0;
          for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
              for (int z = 0; z < 5; ++z) {
                if (x == y || y == z || x == z) continue;
                ++injections;
                const LabeledHost host{hg, {x, y, z}};
                if (host.type() != sigma) continue;
                sum += pair_density(flags[a], flags[b], host);
              }
          sum /= injections;
          CHECK(prod[TypedFlag::unlabelled(h)] == RationalFunction(sum));
        }
        if (a == b) CHECK(square_unlabel(one) == prod);
      }
  }
}

TEST_CASE("square of zero and of a single flag") {
  CHECK(square_unlabel({}).is_zero());
  const auto& flags = enumerate_flags(enumerate_types(3)[1], 4);
  const std::vector<std::pair<RationalFunction, TypedFlag>> zero{{RationalFunction(0), flags[0]}};
  CHECK(square_unlabel(zero).is_zero());
  const std::vector<std::pair<RationalFunction, TypedFlag>> one{{RationalFunction(1), flags[2]}};
  const FlagVector sq = square_unlabel(one);
  CHECK_FALSE(sq.is_zero());
  for (const auto& [f, c] : sq.terms()) CHECK(c(0) > 0);
}
