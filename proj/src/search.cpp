#include "pentaflag/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pentaflag/extremal.hpp"
#include "pentaflag/graph6.hpp"
#include "pentaflag/parallel.hpp"

namespace pentaflag::search {

using graph::Graph;
using report::CertificateReport;
using report::ClaimResult;
using report::Stopwatch;

namespace {

symbolic::Integer to_integer(std::uint64_t v) {
  symbolic::Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

void check_order(int n, int r) {
  if (n < 0 || n > kMaxSearchOrder) throw std::invalid_argument("exhaustive search supports n <= 8");
  if (r < 1) throw std::invalid_argument("forbidden clique size must be at least 1");
}

std::string list_graph6(const std::vector<CanonGraph>& gs) {
  std::string s;
  for (const auto& g : gs) s += (s.empty() ? "" : " ") + g.canon_key();
  return s;
}

}  // namespace

std::vector<CanonGraph> enumerate_clique_free(int n, int r, unsigned threads) {
  check_order(n, r);
  std::vector<CanonGraph> level = {graph::canonical_form(Graph(0))};
  if (r <= 1) return n == 0 ? level : std::vector<CanonGraph>{};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<CanonGraph>> grown(level.size());
    parallel_for(level.size(), threads, [&](std::size_t b) {
      const CanonGraph& base = level[b];
      Graph g(m);
      for (int j = 1; j < m - 1; ++j)
        for (int i = 0; i < j; ++i)
          if (base.adjacent(i, j)) g.add_edge(i, j);
      std::unordered_set<std::uint64_t> seen;
      for (std::uint32_t mask = 0; mask < (1U << (m - 1)); ++mask) {
        for (int i = 0; i < m - 1; ++i) g.set_edge(i, m - 1, (mask >> i) & 1U);
        if (graph::clique_number(g) >= r) continue;
        CanonGraph c = graph::canonical_form(g);
        if (seen.insert(c.key()).second) grown[b].push_back(c);
      }
    });
    std::vector<CanonGraph> next;
    for (auto& v : grown) next.insert(next.end(), v.begin(), v.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

ExtremalRecord max_c5(int n, int r, unsigned threads) {
  const auto classes = enumerate_clique_free(n, r, threads);
  std::vector<std::uint64_t> counts(classes.size());
  parallel_for(classes.size(), threads,
               [&](std::size_t i) { counts[i] = graph::count_five_cycles(classes[i].to_graph()); });
  ExtremalRecord rec;
  rec.n = n;
  rec.r = r;
  rec.classes_scanned = classes.size();
  for (std::uint64_t c : counts) rec.max_count = std::max(rec.max_count, c);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (counts[i] == rec.max_count) rec.argmax.push_back(classes[i]);
  if (r >= 2 && n >= 1) {
    const CanonGraph turan = graph::turan_graph(r - 1, n);
    rec.is_turan_among_argmax = std::find(rec.argmax.begin(), rec.argmax.end(), turan) != rec.argmax.end();
    rec.turan_unique = rec.is_turan_among_argmax && rec.argmax.size() == 1;
  }
  return rec;
}

Rational injective_c5_density(const Graph& g) {
  const long n = g.order();
  Rational d(to_integer(graph::count_five_cycles(g)) * 120, symbolic::Integer(n) * n * n * n * n);
  d.canonicalize();
  return d;
}

ClaimResult verify_density_bound(int k, int n, unsigned threads) {
  Stopwatch clock;
  ClaimResult c("nu(C5,G) 5!/n^5 <= OPT_" + std::to_string(k) + " on K" + std::to_string(k + 1) + "-free G, n = " +
                std::to_string(n));
  const auto classes = enumerate_clique_free(n, k + 1, threads);
  const Rational opt = extremal::opt_formula(k);
  std::vector<Rational> dens(classes.size());
  parallel_for(classes.size(), threads, [&](std::size_t i) { dens[i] = injective_c5_density(classes[i].to_graph()); });
  Rational best = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (dens[i] > opt) c.fail("counterexample " + graph6::encode(classes[i]), symbolic::to_string(dens[i]));
    if (dens[i] > best) {
      best = dens[i];
      at = i;
    }
  }
  c.witness("classes", std::to_string(classes.size()));
  c.witness("largest normalised density", symbolic::to_string(best) + (classes.empty() ? "" : " at " + classes[at].canon_key()));
  c.witness("OPT", symbolic::to_string(opt));
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

CertificateReport finite_shadow(int max_n, unsigned threads) {
  CertificateReport rep;
  rep.command = "verify finite-shadow";
  for (int k = 3; k <= 5; ++k)
    for (int n = 5; n <= max_n; ++n) rep.claims.push_back(verify_density_bound(k, n, threads));
  {
    Stopwatch clock;
    ClaimResult c("Turan graph C5 count == multipartite formula");
    for (int k = 3; k <= 5; ++k)
      for (int n = 5; n <= max_n; ++n) {
        const auto brute = graph::count_five_cycles(graph::turan_graph(k, n).to_graph());
        const auto formula = extremal::multipartite_c5_count(graph::turan_parts(k, n));
        if (formula != to_integer(brute))
          c.fail("T" + std::to_string(k) + "(" + std::to_string(n) + ")",
                 formula.get_str() + " vs " + std::to_string(brute));
      }
    c.witness("orders", "5.." + std::to_string(max_n));
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  {
    Stopwatch clock;
    ClaimResult c("extremal graphs at small n (reported, not asserted)");
    for (int k = 3; k <= 5; ++k)
      for (int n = 5; n <= max_n; ++n) {
        const ExtremalRecord rec = max_c5(n, k + 1, threads);
        const auto turan = graph::count_five_cycles(graph::turan_graph(k, n).to_graph());
        const std::string tag = "k = " + std::to_string(k) + ", n = " + std::to_string(n);
        c.witness(tag, "max " + std::to_string(rec.max_count) + ", Turan " + std::to_string(turan) +
                           (rec.turan_unique ? ", Turan unique" : rec.is_turan_among_argmax ? ", Turan ties" : ", Turan not extremal") +
                           ", maximisers " + list_graph6(rec.argmax));
        if (rec.max_count < turan) c.fail(tag, "maximum below the Turan count");
      }
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

ClaimResult extremal_monotonicity(int max_n, int max_r, unsigned threads) {
  Stopwatch clock;
  ClaimResult c("ex(n, C5, K_r) nondecreasing in n and r, at least the Turan count");
  std::vector<std::vector<std::uint64_t>> best(static_cast<std::size_t>(max_n) + 1,
                                               std::vector<std::uint64_t>(static_cast<std::size_t>(max_r) + 1, 0));
  for (int n = 1; n <= max_n; ++n)
    for (int r = 2; r <= max_r; ++r) {
      const ExtremalRecord rec = max_c5(n, r, threads);
      best[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] = rec.max_count;
      const std::string tag = "n = " + std::to_string(n) + ", r = " + std::to_string(r);
      if (n > 1 && rec.max_count < best[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(r)])
        c.fail(tag, "smaller than at n - 1");
      if (r > 2 && rec.max_count < best[static_cast<std::size_t>(n)][static_cast<std::size_t>(r) - 1])
        c.fail(tag, "smaller than at r - 1");
      const auto balanced = extremal::multipartite_c5_count(graph::turan_parts(r - 1, n));
      if (to_integer(rec.max_count) < balanced) c.fail(tag, "below the balanced multipartite count");
    }
  std::string row;
  for (int r = 2; r <= max_r; ++r)
    row += (row.empty() ? "" : " ") + std::to_string(best[static_cast<std::size_t>(max_n)][static_cast<std::size_t>(r)]);
  c.witness("maxima at n = " + std::to_string(max_n) + " for r = 2.." + std::to_string(max_r), row);
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

}  // namespace pentaflag::search
