#pragma once

// The published sum-of-squares certificate for the C5 density in
// K_{k+1}-free graphs: its data tables, the reconstruction of the table
// index order and of the flags behind each square, and the exact checks.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentaflag/flag.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/report.hpp"
#include "pentaflag/symbolic.hpp"

namespace pentaflag::cert {

using graph::CanonGraph;
using symbolic::Integer;
using symbolic::Poly;
using symbolic::Rational;
using symbolic::RationalFunction;

inline constexpr int kClasses = 34;
inline constexpr int kSquares = 6;

struct ExpectedCoefficient {
  std::string label;  // "C1" .. "C10"
  RationalFunction value;
  std::vector<int> indices;
};

/// The certificate as printed: sparse square vectors P1..P6 over the table
/// indices 0..33, scaling functions, Zykov bound and the resulting
/// coefficient list. P6 is stored in the original (not re-indexed)
/// numbering.
struct PublishedTables {
  Poly den;
  RationalFunction z;
  std::array<RationalFunction, 5> p;  // p1..p5
  std::array<std::map<int, Poly>, kSquares> P;
  std::array<int, kClasses> five_cycles{};
  RationalFunction Z_generic;
  RationalFunction Z_K5;
  std::vector<int> tight_indices;
  std::vector<int> k3_removed;
  std::map<std::string, Rational> k3_p;  // p1, p2, p3, p4, p6
  std::vector<ExpectedCoefficient> expected_C;
  std::map<int, Rational> k3_expected;
  /// The k = 3 listing, translated back to the original indices:
  /// P1..P4 and P6 at k = 3, and the C5 counts it uses.
  std::array<std::map<int, Rational>, 5> k3_listing;
  std::map<int, int> k3_listing_counts;
  /// P6 as displayed in the text (as opposed to the listing).
  std::map<int, Rational> P6_display;
  RationalFunction opt;          // theorem display
  RationalFunction opt_listing;  // "optimum = ..." in the listing
  /// The denominator as printed in the proof text.
  Poly den_text;

  static const PublishedTables& get();
  /// The expected coefficient at table index i.
  const ExpectedCoefficient& expected_at(int i) const;
  /// Entry i of P_{j+1} (zero when absent).
  Poly P_entry(int j, int i) const;
  bool removed_at_k3(int i) const;
  bool tight(int i) const;
};

/// One square [[ (sum c_a F_a)^2 ]]_sigma recovered by the search.
struct SquareWitness {
  std::string name;   // "P1" .. "P6"
  std::string shape;  // e.g. "10[[((k-1)A - B)^2]]"
  flag::TypeSigma sigma;
  std::vector<flag::TypedFlag> flags;  // A, B[, C]
  std::vector<Poly> coefficients;      // c_A, c_B[, c_C]
  Rational multiplier;
  /// The multiplier written in the shape; differs from `multiplier` only
  /// when no witness exists without a positive rescaling.
  Rational stated_multiplier;
  /// The expansion over the artifact's own class order.
  std::vector<Poly> vector;
  /// Number of distinct (sigma, flags) choices giving the same vector.
  std::size_t equivalent_choices = 0;
};

/// A table entry that the expansion of the recovered square contradicts.
struct TableDiscrepancy {
  std::string square;
  int index = 0;
  Poly table;
  Poly derived;
};

struct IndexMapping {
  std::array<CanonGraph, kClasses> classes;       // table index -> class
  std::array<int, kClasses> position{};           // table index -> enumerate_graphs(5) position
  std::array<SquareWitness, kSquares> witnesses;  // P1..P6
  /// Bijections satisfying every constraint, over all witness choices.
  Integer solutions;
  /// Combinations of distinct witness vectors that admit a bijection.
  std::size_t witness_combinations = 0;
  /// Per square, candidates surviving the value-multiset filter.
  std::array<std::size_t, kSquares> surviving_candidates{};
  /// Empty when every square reproduces its table exactly. Otherwise the
  /// search fell back to expansions that add terms missing from the
  /// table, and these are the entries involved.
  std::vector<TableDiscrepancy> discrepancies;
  bool exact() const { return discrepancies.empty(); }
};

struct ReconstructionResult {
  std::optional<IndexMapping> mapping;
  report::ClaimResult claim;
};

/// Constraint search for the table order and square witnesses.
ReconstructionResult reconstruct_mapping();

/// Validates a mapping loaded from elsewhere (e.g. a cache) against every
/// constraint; returns the violated constraint, if any.
std::optional<std::string> validate_mapping(const IndexMapping& m);

/// The expansion vector of a witness, recomputed from its flags.
std::vector<Poly> square_vector(const flag::TypeSigma& sigma, const std::vector<flag::TypedFlag>& flags,
                                const std::vector<Poly>& coefficients, const Rational& multiplier);

/// Versioned JSON for caching a mapping together with the report of the
/// search that produced it.
std::string mapping_to_json(const IndexMapping& m, const report::ClaimResult& search_claim);
struct CachedMapping {
  IndexMapping mapping;
  report::ClaimResult search_claim;
};
/// nullopt on malformed input; the mapping still has to pass
/// validate_mapping before use.
std::optional<CachedMapping> mapping_from_json(std::string_view text);

/// Where the square vectors come from: the printed tables, or the
/// expansions of the recovered flags (which repair omitted entries).
enum class SquareSource { table, flags };

/// c_{F_i}(k) = nu(C5, F_i) + z Z_i + sum_j p_j (P_j)_i for every table
/// index, with Z_i the Zykov constraint entry of the mapped class.
std::array<RationalFunction, kClasses> main_coefficients(const IndexMapping& m, SquareSource source);

report::CertificateReport verify_main(const IndexMapping& m, long k_sweep = 1000);
report::CertificateReport verify_k3(const IndexMapping& m);
report::CertificateReport tight_set_characterization(const IndexMapping& m);

/// Finite-order shadow of the certificate on every K_{k+1}-free graph of
/// order n: checks the exact decomposition d(C5, G) = sum nu(C5, F) P(F, G)
/// and reports (without asserting) how often sum c_F(k) P(F, G) falls below
/// d(C5, G) at this order.
report::CertificateReport finite_decomposition(const IndexMapping& m, int n, int k);

}  // namespace pentaflag::cert
