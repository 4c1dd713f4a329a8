#pragma once

#include <vector>

#include "apportion/biprop.hpp"
#include "apportion/election.hpp"
#include "apportion/signpost.hpp"

// Exhaustive reference implementations. Slow by design; every fast path in
// the library is tested against these. Size guards throw TooLarge.
namespace apportion::oracles {

// Seat vectors summing to `house` that pass the multiplier-interval
// membership test, found by enumerating all compositions.
std::vector<std::vector<int>> apportion_by_enumeration(
    const std::vector<Rat>& votes, int house, const Signpost& s);

// Every committee of house seats meeting the type-balance condition whose
// party counts form a valid seat vector. Guarded to at most 20 candidates.
std::vector<Allocation> enumerate_feasible_allocations(
    const ElectionInstance& I, const Signpost& s);

// All integer matrices with row sums J, column sums phi and entries within
// the capacities. Guarded by the product of row ranges.
std::vector<SeatMatrix> enumerate_marginal_matrices(
    const std::vector<int>& J, std::array<int, 2> phi,
    const std::vector<std::array<std::optional<int>, 2>>& S);

// Marginal matrices filtered through verify_biproportional. Infeasible
// marginals yield an empty set rather than an error.
std::vector<SeatMatrix> brute_biproportional(const TwoDimInstance& T,
                                             const Signpost& delta);

// Integer-grid check of the seat-split system: does some per-cell split of J
// fit the supplies and give both types at least floor(h/2) seats?
bool lp_feasibility_oracle(const ElectionInstance& I,
                           const std::vector<int>& J);

}  // namespace apportion::oracles
