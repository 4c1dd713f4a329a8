#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "apportion/election.hpp"
#include "apportion/rational.hpp"
#include "apportion/signpost.hpp"

namespace apportion {

// Row-by-type vote matrix with per-cell capacities and target marginals.
// A missing capacity means the cell is unbounded.
struct TwoDimInstance {
  std::vector<std::array<Rat, 2>> P;
  std::vector<std::array<std::optional<int>, 2>> S;
  std::vector<int> J;
  std::array<int, 2> phi{0, 0};
};

// Shape and sign checks; throws MarginalMismatch when the row and column
// targets disagree in total.
void validate_two_dim(const TwoDimInstance& T);

using SeatMatrix = std::vector<std::array<int, 2>>;

struct BipropResult {
  std::vector<SeatMatrix> solutions;  // deduplicated, sorted
  bool tie = false;
  // Row receiving each female-column increment along one optimal path.
  std::vector<int> increments;
};

// All integer matrices meeting the marginals and capacities that round a
// doubly scaled vote matrix under `delta`. Exact rational arithmetic; ties
// branch exhaustively up to `max_ties`. Throws InfeasibleError when the
// marginals cannot be met under the capacities.
BipropResult solve_biproportional(const TwoDimInstance& T,
                                  const Signpost& delta,
                                  std::size_t max_ties = 64);

// Membership test via pairwise seat-swap optimality: shifting one female
// seat between any two rows may never lower the product objective. Also
// checks marginals, bounds and capacities.
bool verify_biproportional(const TwoDimInstance& T, const Signpost& delta,
                           const SeatMatrix& x);

// True when every applicable swap inequality holds strictly, which
// certifies x as the only solution.
bool swap_inequalities_strict(const TwoDimInstance& T, const Signpost& delta,
                              const SeatMatrix& x);

// Divisor apportionment of party votes, then a biproportional split of each
// seat vector across types against the parity marginal. The allocation
// seats the best-ranked x_it candidates of every cell.
struct BipropRun {
  std::vector<int> J;
  SeatMatrix x;
  Allocation alloc;
};

std::vector<BipropRun> mechanism_biprop(const ElectionInstance& I,
                                        const Signpost& party_method,
                                        const Signpost& delta,
                                        std::size_t max_ties = 64);

// The two-dim instance mechanism_biprop solves for a given seat vector.
TwoDimInstance election_two_dim(const ElectionInstance& I,
                                const std::vector<int>& J);

}  // namespace apportion
