#pragma once

// Closed-form C5 and K5 counts in complete multipartite graphs, the optimum
// formula, and the polynomial inequalities of the stability and exactness
// arguments.

#include <string>
#include <vector>

#include "pentaflag/graph.hpp"
#include "pentaflag/report.hpp"
#include "pentaflag/symbolic.hpp"

namespace pentaflag::extremal {

using graph::PartSizes;
using symbolic::EpsPoly;
using symbolic::Integer;
using symbolic::Rational;
using symbolic::RationalFunction;

enum class Provenance { formula, brute_force };

std::string_view to_string(Provenance p);

struct CountFormulaResult {
  Rational value;
  Provenance provenance = Provenance::formula;
};

/// (12k^4 - 60k^3 + 120k^2 - 120k + 48) / k^4 as a function of k.
RationalFunction opt_function();
/// Throws std::invalid_argument for k < 2. Only k >= 3 is meaningful.
Rational opt_formula(long k);

/// nu(C5, K_p) = 12 #K5 + 6 #K_{2,1,1,1} + 4 #K_{2,2,1} over induced
/// copies, each counted by choosing vertices part by part. Parts must be
/// positive and total at most 10^6.
Integer multipartite_c5_count(const PartSizes& p);
/// Five-cycles counted on the materialised graph; total at most 64.
Integer multipartite_c5_brute_force(const PartSizes& p);
/// Number of K5 in K_p: the fifth elementary symmetric function of p.
Integer multipartite_k5_count(const PartSizes& p);

/// nu(C5, T_k(n)) / C(n, 5). Requires n >= 5.
CountFormulaResult turan_density_c5(int k, long n);

struct ZykovDensity {
  Rational exact;  // nu(K5, T_k(n)) / C(n, 5)
  Rational limit;  // (k-1)(k-2)(k-3)(k-4) / k^4
};
ZykovDensity zykov_k5_density(int k, long n);

/// nu(C5) after moving one vertex from part i to part j, minus before.
/// Throws std::invalid_argument unless p[i] >= p[j] + 2.
Integer move_vertex_gain(const PartSizes& p, int i, int j);

/// Coefficients of eps^0..eps^5 in the C5 density of the complete
/// k-partite graph with one part of relative size (1 + eps(k-1))/k and
/// k - 1 parts of size (1 - eps)/k.
EpsPoly unbalanced_expansion();

// ---------------------------------------------------------------- checks

/// Formula == brute force for every composition with total <= max_total,
/// after checking nu(C5, T3(6)) = 24 and nu(C5, T4(8)) = 288 by brute force.
report::ClaimResult count_oracle_check(int max_total = 10, unsigned threads = 0);
/// move_vertex_gain > 0 for every composition with at least 3 parts,
/// total <= max_total, and every admissible (i, j).
report::ClaimResult rebalancing_check(int max_total = 12, unsigned threads = 0);
/// x1 x2 < (x1-1)(x2+1) and x1 C(x2,2) < (x2+1) C(x1-1,2) for
/// 1 <= x2, x2 + 2 <= x1 <= max_x1.
report::ClaimResult two_part_inequalities(int max_x1 = 50);
/// The eps-expansion against its displayed series, plus the positivity of
/// the eps^2 factor for integers k >= 3.
report::CertificateReport unbalanced_part_check(long k_sweep = 1000);
/// Bound on the five-cycles through a vertex seeing two parts sparsely.
report::CertificateReport sparse_vertex_check(long k_sweep = 1000);
/// Bound on the five-cycles through one of two adjacent misplaced vertices.
report::CertificateReport adjacent_pair_check(long k_sweep = 1000);
/// d(C5, T_k(km)) for m = 2..max_m against opt_formula(k).
report::ClaimResult turan_convergence_check(const std::vector<int>& ks = {3, 4, 5}, int max_m = 10);
/// The examples of turan_density_c5 and zykov_k5_density at larger n.
report::ClaimResult turan_examples_check();

}  // namespace pentaflag::extremal
