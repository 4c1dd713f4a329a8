#pragma once

#include <cstddef>
#include <vector>

#include "apportion/election.hpp"
#include "apportion/signpost.hpp"

namespace apportion {

struct GreedySwap {
  int removed = -1;   // candidate index dropped from the committee
  int inserted = -1;  // same-party candidate of the other type seated instead
};

struct GreedyRun {
  std::vector<int> J;
  Allocation oblivious;  // best J_i per party, types ignored
  std::vector<GreedySwap> swaps;
  Allocation result;
};

// Seats the top J_i candidates of each party, then repairs the type balance
// by swapping the worst-ranked over-represented candidate for the best
// available same-party candidate of the other type. Throws StuckError when a
// replacement pool is empty.
GreedyRun greedy_for_counts(const ElectionInstance& I,
                            const std::vector<int>& J);

// One run per seat vector of the divisor method on aggregated party votes.
std::vector<GreedyRun> mechanism_greedy(const ElectionInstance& I,
                                        const Signpost& s,
                                        std::size_t max_ties = 64);

// Elected flags permuted into candidate_order positions.
std::vector<char> indicator_vector(const ElectionInstance& I,
                                   const Allocation& E);

// Length of the longest common prefix of two indicator vectors.
std::size_t prefix_length(const std::vector<char>& a,
                          const std::vector<char>& b);

}  // namespace apportion
