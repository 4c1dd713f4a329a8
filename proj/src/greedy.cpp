#include "apportion/greedy.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"

namespace apportion {

GreedyRun greedy_for_counts(const ElectionInstance& I,
                            const std::vector<int>& J) {
  validate_instance(I);
  if (static_cast<int>(J.size()) != I.parties)
    throw std::invalid_argument("J has wrong length");
  if (std::accumulate(J.begin(), J.end(), 0) != I.house)
    throw std::invalid_argument("J does not sum to the house size");

  std::vector<int> order = candidate_order(I);
  CellIndex cells = cells_by_rank(I);

  GreedyRun run;
  run.J = J;
  Allocation E(I.candidates.size(), 0);

  // Phase 1: party quotas only, filled best rank first.
  std::vector<int> left = J;
  for (int c : order) {
    int p = I.candidates[c].party;
    if (left[p] > 0) {
      E[c] = 1;
      --left[p];
    }
  }
  for (int i = 0; i < I.parties; ++i)
    if (left[i] > 0)
      throw InfeasibleError("party " + std::to_string(i) +
                            " has fewer candidates than seats");
  run.oblivious = E;

  // Phase 2: rebalance types two seats at a time.
  std::array<int, 2> tc = counts_by_type(I, E);
  int d = tc[0] - tc[1];
  int target = I.house % 2;
  if (std::abs(d) > target) {
    Ctype over = d > 0 ? Ctype::F : Ctype::M;
    Ctype under = other(over);
    while (std::abs(d) > target) {
      int worst = -1;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (E[*it] && I.candidates[*it].type == over) {
          worst = *it;
          break;
        }
      }
      int p = I.candidates[worst].party;
      int best = -1;
      for (int c : cells[p][static_cast<int>(under)]) {
        if (!E[c]) {
          best = c;
          break;
        }
      }
      if (best < 0) throw StuckError(p, worst);
      E[worst] = 0;
      E[best] = 1;
      run.swaps.push_back({worst, best});
      d += over == Ctype::F ? -2 : 2;
    }
  }

  run.result = E;
  return run;
}

std::vector<GreedyRun> mechanism_greedy(const ElectionInstance& I,
                                        const Signpost& s,
                                        std::size_t max_ties) {
  validate_instance(I);
  std::vector<GreedyRun> runs;
  for (const std::vector<int>& J :
       apportion(party_votes(I), I.house, s, max_ties))
    runs.push_back(greedy_for_counts(I, J));
  return runs;
}

std::vector<char> indicator_vector(const ElectionInstance& I,
                                   const Allocation& E) {
  std::vector<int> order = candidate_order(I);
  std::vector<char> v(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) v[pos] = E[order[pos]];
  return v;
}

std::size_t prefix_length(const std::vector<char>& a,
                          const std::vector<char>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t k = 0;
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

}  // namespace apportion
