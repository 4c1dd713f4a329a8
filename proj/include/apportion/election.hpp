#pragma once

#include <array>
#include <string>
#include <vector>

#include "apportion/rational.hpp"
#include "apportion/signpost.hpp"

namespace apportion {

enum class Ctype { F = 0, M = 1 };

inline Ctype other(Ctype t) { return t == Ctype::F ? Ctype::M : Ctype::F; }

// Breaks the leading-type decision when both types hold the same vote total
// and the house is odd.
enum class TieBreak { PreferF, PreferM };

struct Candidate {
  std::string id;
  int party = 0;
  Ctype type = Ctype::F;
  Rat votes;
};

struct ElectionInstance {
  std::vector<Candidate> candidates;
  int parties = 0;
  int house = 0;
  TieBreak leading_tie_break = TieBreak::PreferF;
};

// Throws std::invalid_argument on out-of-range party indices, duplicate or
// empty ids, negative votes or a negative house.
void validate_instance(const ElectionInstance& I);

// One elected flag per candidate, in instance order.
using Allocation = std::vector<char>;

// Candidate indices from best to worst: votes descending, then party
// ascending, then id ascending. Scale-invariant by construction.
std::vector<int> candidate_order(const ElectionInstance& I);

// rank[c] = position of candidate c in candidate_order, 0-based.
std::vector<int> candidate_rank(const ElectionInstance& I);

// cells[i][t] = candidate indices of party i and type t, best rank first.
using CellIndex = std::vector<std::array<std::vector<int>, 2>>;
CellIndex cells_by_rank(const ElectionInstance& I);

std::vector<Rat> party_votes(const ElectionInstance& I);
std::vector<std::array<Rat, 2>> vote_matrix(const ElectionInstance& I);
std::vector<std::array<int, 2>> supply_matrix(const ElectionInstance& I);
std::array<Rat, 2> type_votes(const ElectionInstance& I);

// Same instance with every vote multiplied by alpha; throws on alpha <= 0.
ElectionInstance scale(const ElectionInstance& I, const Rat& alpha);

std::vector<int> counts_by_party(const ElectionInstance& I,
                                 const Allocation& E);
std::array<int, 2> counts_by_type(const ElectionInstance& I,
                                  const Allocation& E);
std::vector<std::array<int, 2>> cross_tab(const ElectionInstance& I,
                                          const Allocation& E);

// Every cell holds at least ceil(house / 2) candidates.
bool supply_condition(const ElectionInstance& I);

// Type balance: |#f - #m| equals house mod 2.
bool condition_A(const ElectionInstance& I, const Allocation& E);

// Party counts form a valid seat vector for the aggregated party votes.
bool condition_B(const ElectionInstance& I, const Allocation& E,
                 const Signpost& s);

// Whether some allocation with party counts J satisfies condition_A within
// the available supplies. Closed form: per-party counts must fit the cell
// sizes and the attainable female-seat interval must meet the balanced one.
bool feasible_for(const ElectionInstance& I, const std::vector<int>& J);

// Column targets (f, m): an even house splits in half, an odd house gives
// the extra seat to the type with strictly more total votes, falling back to
// the instance tie-break.
std::array<int, 2> parity_marginal(const ElectionInstance& I);

}  // namespace apportion
