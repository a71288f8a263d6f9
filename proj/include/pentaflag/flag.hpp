#pragma once

// Flags over a labelled type, their densities in labelled hosts, products
// and the unlabelling operator.
//
// A labelled type is stored by its size s and the graph6-order bit string
// of the adjacency among labels 1..s. A TypedFlag is kept in the canonical
// form that leaves the labelled vertices at positions 0..s-1 (in label
// order) and minimises the remaining bit string, so two flags are equal
// exactly when a label-preserving isomorphism exists.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentaflag/canon.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/symbolic.hpp"

namespace pentaflag::flag {

using graph::CanonGraph;
using graph::Graph;
using symbolic::Rational;
using symbolic::RationalFunction;

inline constexpr int kMaxTypeSize = 3;
inline constexpr int kMaxFlagOrder = 6;

class TypeSigma {
 public:
  TypeSigma() = default;
  /// The labelled type whose label i is vertex i of g.
  static TypeSigma from_graph(const Graph& g);
  /// g under its canonical labelling.
  static TypeSigma canonical(const CanonGraph& g);
  static TypeSigma empty() { return {}; }
  /// s labels with adjacency bit string `bits` in graph6 order.
  static TypeSigma from_bits(int s, std::uint64_t bits);

  int size() const { return s_; }
  std::uint64_t bits() const { return bits_; }
  bool adjacent(int i, int j) const;
  Graph to_graph() const;
  CanonGraph underlying() const;

  friend auto operator<=>(const TypeSigma&, const TypeSigma&) = default;

 private:
  int s_ = 0;
  std::uint64_t bits_ = 0;
};

/// The canonical labelled types of size s: one per isomorphism class of
/// graphs on s vertices (1, 1, 2, 4 types for s = 0..3).
std::vector<TypeSigma> enumerate_types(int s);

class TypedFlag {
 public:
  TypedFlag() = default;
  /// labels[i] is the vertex carrying label i.
  static TypedFlag make(const Graph& g, std::span<const int> labels);
  static TypedFlag unlabelled(const CanonGraph& g);

  int order() const { return n_; }
  int type_size() const { return s_; }
  TypeSigma type() const;
  std::uint64_t key() const { return key_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Graph to_graph() const;
  CanonGraph underlying() const;

  /// graph6 of the canonical labelling plus "|θ:" and the label positions,
  /// e.g. "Dhc|θ:0,1,2". Unlabelled flags use "|θ:".
  std::string serialize() const;
  /// Accepts any label positions, not only canonical ones.
  static TypedFlag parse(std::string_view text);

  friend auto operator<=>(const TypedFlag& a, const TypedFlag& b) {
    if (auto c = a.s_ <=> b.s_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.key_ <=> b.key_;
  }
  friend bool operator==(const TypedFlag& a, const TypedFlag& b) {
    return a.s_ == b.s_ && a.n_ == b.n_ && a.key_ == b.key_;
  }

 private:
  friend TypedFlag flag_from_adjacency(const graph::detail::SmallAdjacency& adj, int n, int s);
  int s_ = 0;
  int n_ = 0;
  std::uint64_t key_ = 0;
  graph::detail::SmallAdjacency adj_{};
};

/// Canonical flag of a small labelled adjacency whose labels sit at
/// positions 0..s-1.
TypedFlag flag_from_adjacency(const graph::detail::SmallAdjacency& adj, int n, int s);

/// A host for densities: any graph on at most 64 vertices with labelled
/// vertices `labels` (label i on vertex labels[i]).
struct LabeledHost {
  Graph graph;
  std::vector<int> labels;

  static LabeledHost from_flag(const TypedFlag& f);
  TypeSigma type() const;
  int free_count() const { return graph.order() - static_cast<int>(labels.size()); }
};

/// All sigma-flags on ell vertices, sorted. Requires s <= ell <= 6.
const std::vector<TypedFlag>& enumerate_flags(const TypeSigma& sigma, int ell);

/// P(F, G): probability that a uniform (|F|-s)-subset of the free vertices
/// of G, together with the labels, induces F.
Rational flag_density(const TypedFlag& f, const LabeledHost& g);
Rational flag_density(const TypedFlag& f, const TypedFlag& g);

/// P(F1, F2; G) over uniformly random disjoint pairs (X1, X2).
Rational pair_density(const TypedFlag& f1, const TypedFlag& f2, const LabeledHost& g);
Rational pair_density(const TypedFlag& f1, const TypedFlag& f2, const TypedFlag& g);

/// Precomputed sub-flag keys of one host, for repeated density queries.
class HostTable {
 public:
  explicit HostTable(LabeledHost host, int max_extra);
  const LabeledHost& host() const { return host_; }
  /// Key of the flag induced by the labels plus the free vertices in
  /// `mask` (bit i = i-th free vertex). |mask| <= max_extra.
  std::uint64_t key(std::uint32_t mask) const { return keys_[mask]; }

  Rational density(const TypedFlag& f) const;
  Rational pair_density(const TypedFlag& f1, const TypedFlag& f2) const;
  /// P(F, G) for every F in `basis` (all of one order).
  std::vector<Rational> densities(const std::vector<TypedFlag>& basis) const;

 private:
  void check_type(const TypedFlag& f) const;
  LabeledHost host_;
  TypeSigma type_;
  int free_ = 0;
  int max_extra_ = 0;
  std::vector<std::uint64_t> keys_;
};

/// Linear combination of flags over one basis (sigma, ell); unlabelled
/// classes are flags over the empty type.
class FlagVector {
 public:
  FlagVector() = default;
  FlagVector(TypeSigma sigma, int ell) : sigma_(sigma), ell_(ell) {}

  const TypeSigma& sigma() const { return sigma_; }
  int order() const { return ell_; }
  const std::map<TypedFlag, RationalFunction>& terms() const { return terms_; }
  RationalFunction operator[](const TypedFlag& f) const;
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::invalid_argument when f is not in the basis.
  void add(const TypedFlag& f, const RationalFunction& c);
  FlagVector& operator+=(const FlagVector& rhs);
  FlagVector& operator*=(const RationalFunction& c);
  friend FlagVector operator+(FlagVector a, const FlagVector& b) { return a += b; }
  friend FlagVector operator*(const RationalFunction& c, FlagVector v) { return v *= c; }
  friend bool operator==(const FlagVector& a, const FlagVector& b) {
    return a.sigma_ == b.sigma_ && a.ell_ == b.ell_ && a.terms_ == b.terms_;
  }

 private:
  void check_basis(const TypedFlag& f) const;
  TypeSigma sigma_;
  int ell_ = 0;
  std::map<TypedFlag, RationalFunction> terms_;
};

/// F1 * F2 = sum over F in F^sigma_ell of P(F1, F2; F) F.
FlagVector product_expand(const TypedFlag& f1, const TypedFlag& f2);

/// q_sigma(F): fraction of injective labellings of the underlying graph
/// that give a flag isomorphic to F.
Rational unlabel_factor(const TypedFlag& f);
FlagVector unlabel(const FlagVector& v);

/// [[ (sum_a c_a F_a)^2 ]]_sigma expanded bilinearly over unlabelled
/// classes. All flags must share sigma and order.
FlagVector square_unlabel(std::span<const std::pair<RationalFunction, TypedFlag>> combination);

}  // namespace pentaflag::flag
