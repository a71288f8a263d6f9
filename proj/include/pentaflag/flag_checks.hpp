#pragma once

// Exhaustive checks of the flag calculus itself: the finite chain rule for
// pair densities and the decay of the pair-density defect on Turán hosts.

#include <vector>

#include "pentaflag/report.hpp"

namespace pentaflag::flag {

struct ChainLimits {
  int max_type = 3;
  int max_flag = 4;
  int max_host = 6;
};

/// P(F1, F2; G) == sum_F P(F1, F2; F) P(F, G) over F in F^sigma_l,
/// l = |F1| + |F2| - s, for every type, flag pair and host within `limits`.
report::ClaimResult chain_identity(const ChainLimits& limits = {}, unsigned threads = 0);

/// |P(F1, F2; G) - P(F1, G) P(F2, G)| on T_3(n) with labels placed on its
/// parts, for flags with one or two unlabelled vertices and types of size
/// at most 2: at most 4/n at every order. Pairs whose defect grows with n
/// are counted but not failed.
report::ClaimResult pair_defect_decay(const std::vector<int>& orders = {6, 9, 12, 15}, unsigned threads = 0);

}  // namespace pentaflag::flag
