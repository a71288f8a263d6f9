#pragma once

// Exhaustive search over K_r-free graphs of order at most 8: the maximum
// number of five-cycles, its maximisers, and the finite-order shadow of
// the density bound.

#include <cstdint>
#include <vector>

#include "pentaflag/graph.hpp"
#include "pentaflag/report.hpp"
#include "pentaflag/symbolic.hpp"

namespace pentaflag::search {

using graph::CanonGraph;
using symbolic::Rational;

inline constexpr int kMaxSearchOrder = 8;

/// Every class on n vertices with clique number < r, once each, sorted by
/// canonical key. Grown vertex by vertex from the K_r-free classes on
/// n - 1 vertices. Throws std::invalid_argument for n > 8 or r < 1.
std::vector<CanonGraph> enumerate_clique_free(int n, int r, unsigned threads = 0);

struct ExtremalRecord {
  int n = 0;
  int r = 0;  // forbidden clique size
  std::uint64_t max_count = 0;
  std::vector<CanonGraph> argmax;
  bool is_turan_among_argmax = false;
  bool turan_unique = false;
  std::size_t classes_scanned = 0;
};

/// Maximum of nu(C5, G) over K_r-free G on n <= 8 vertices with all
/// maximisers. Whether T_{r-1}(n) attains or uniquely attains it is only
/// recorded.
ExtremalRecord max_c5(int n, int r, unsigned threads = 0);

/// nu(C5, G) 5!/n^5, the injection-probability normalisation.
Rational injective_c5_density(const graph::Graph& g);

/// Every K_{k+1}-free class on n vertices has nu(C5) 5!/n^5 <= OPT_k;
/// counterexamples are listed in graph6.
report::ClaimResult verify_density_bound(int k, int n, unsigned threads = 0);

/// The density bound for n <= max_n and k in {3, 4, 5}, the Turan counts
/// against the multipartite formula, and extremality of the Turan graph
/// (reported, not asserted).
report::CertificateReport finite_shadow(int max_n = 7, unsigned threads = 0);

/// max_c5 monotone in n (n <= max_n) and in r (r <= max_r), and at least
/// the balanced multipartite count.
report::ClaimResult extremal_monotonicity(int max_n = 7, int max_r = 6, unsigned threads = 0);

}  // namespace pentaflag::search
