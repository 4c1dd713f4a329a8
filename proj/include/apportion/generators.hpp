#pragma once

#include <cstdint>

#include "apportion/biprop.hpp"
#include "apportion/election.hpp"
#include "apportion/signpost.hpp"

namespace apportion {

// A two-dim instance with a known unique solution and known fair share.
// `ell` is the designed per-entry gap for gap instances and zero for the
// row-violation family.
struct HardInstance {
  TwoDimInstance instance;
  int ell = 0;
  int rows = 0;
  SeatMatrix expected_x;
  std::vector<std::array<Rat, 2>> expected_F;
};

// Smallest n >= 1 with delta(7+ell) * delta(3) * ell^2 < delta(1)^2 *
// (21n - 7ell), the exact sign condition for the gap construction to pin a
// unique solution. Requires delta(1) > 0.
int find_n(int ell, const Signpost& delta);

// Uncapacitated instance whose unique solution misses its own fair share by
// at least `ell` in both entries of row 1.
HardInstance gen_gap_instance(int ell, const Signpost& delta);

// Uncapacitated instance whose unique solution leaves a fixed fraction of
// rows outside the fair-share quota (1/(n+1) rows, or 1/3 when the first
// signpost value is zero).
HardInstance gen_row_violation_instance(const Signpost& delta);

// Fixed elections exercising specific mechanism behavior: a house of 16 no
// allocation can balance, a house of 8 that strands the greedy correction,
// and a 6-seat two-party contrast where the greedy result escapes every
// fair-share bracket.
enum class FixedElection { Infeasible16, Stuck8, Contrast6 };

ElectionInstance gen_fixed_election(FixedElection which);

// Deterministic instance with ceil(h/2) or one more candidate per cell, so
// the supply condition always holds. Integer votes in [1, max_vote].
ElectionInstance gen_random_supply(std::uint64_t seed, int n, int h,
                                   int max_vote);

}  // namespace apportion
