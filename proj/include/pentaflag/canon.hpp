#pragma once

// Minimal-labelling search shared by CanonGraph and typed flags.

#include <array>
#include <cstdint>

#include "pentaflag/graph.hpp"

namespace pentaflag::graph::detail {

using SmallAdjacency = std::array<std::uint16_t, kMaxCanonOrder>;

struct Labelling {
  std::uint64_t key = 0;
  /// perm[position] = original vertex.
  std::array<std::uint8_t, kMaxCanonOrder> perm{};
};

/// Lexicographically smallest graph6-order bit string over all
/// permutations that keep vertices 0..fixed-1 in place. Explores the
/// permutation tree level by level, keeping only nodes whose prefix is
/// minimal, and branches once per class of interchangeable twin vertices.
Labelling minimal_labelling(const SmallAdjacency& adj, int n, int fixed = 0);

/// Bit string of the labelling `perm` (not minimised).
std::uint64_t key_of(const SmallAdjacency& adj, int n);

SmallAdjacency adjacency_from_key(int n, std::uint64_t key);

inline constexpr int pair_bits(int n) { return n * (n - 1) / 2; }

}  // namespace pentaflag::graph::detail
