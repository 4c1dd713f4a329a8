#include "apportion/election.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "apportion/divisor.hpp"

namespace apportion {

void validate_instance(const ElectionInstance& I) {
  if (I.house < 0) throw std::invalid_argument("house must be nonnegative");
  if (I.parties < 0) throw std::invalid_argument("party count negative");
  std::set<std::string> ids;
  for (const Candidate& c : I.candidates) {
    if (c.id.empty()) throw std::invalid_argument("candidate id empty");
    if (!ids.insert(c.id).second)
      throw std::invalid_argument("duplicate candidate id: " + c.id);
    if (c.party < 0 || c.party >= I.parties)
      throw std::invalid_argument("candidate " + c.id +
                                  " references unknown party");
    if (c.votes < 0)
      throw std::invalid_argument("candidate " + c.id + " has negative votes");
  }
}

std::vector<int> candidate_order(const ElectionInstance& I) {
  std::vector<int> order(I.candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Candidate& ca = I.candidates[a];
    const Candidate& cb = I.candidates[b];
    if (ca.votes != cb.votes) return ca.votes > cb.votes;
    if (ca.party != cb.party) return ca.party < cb.party;
    return ca.id < cb.id;
  });
  return order;
}

std::vector<int> candidate_rank(const ElectionInstance& I) {
  std::vector<int> order = candidate_order(I);
  std::vector<int> rank(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
  return rank;
}

CellIndex cells_by_rank(const ElectionInstance& I) {
  CellIndex cells(I.parties);
  for (int c : candidate_order(I)) {
    const Candidate& cand = I.candidates[c];
    cells[cand.party][static_cast<int>(cand.type)].push_back(c);
  }
  return cells;
}

std::vector<Rat> party_votes(const ElectionInstance& I) {
  std::vector<Rat> q(I.parties, Rat(0));
  for (const Candidate& c : I.candidates) q[c.party] += c.votes;
  return q;
}

std::vector<std::array<Rat, 2>> vote_matrix(const ElectionInstance& I) {
  std::vector<std::array<Rat, 2>> p(I.parties, {Rat(0), Rat(0)});
  for (const Candidate& c : I.candidates)
    p[c.party][static_cast<int>(c.type)] += c.votes;
  return p;
}

std::vector<std::array<int, 2>> supply_matrix(const ElectionInstance& I) {
  std::vector<std::array<int, 2>> s(I.parties, {0, 0});
  for (const Candidate& c : I.candidates)
    ++s[c.party][static_cast<int>(c.type)];
  return s;
}

std::array<Rat, 2> type_votes(const ElectionInstance& I) {
  std::array<Rat, 2> v{Rat(0), Rat(0)};
  for (const Candidate& c : I.candidates)
    v[static_cast<int>(c.type)] += c.votes;
  return v;
}

ElectionInstance scale(const ElectionInstance& I, const Rat& alpha) {
  if (alpha <= 0) throw std::invalid_argument("scale factor must be positive");
  ElectionInstance out = I;
  for (Candidate& c : out.candidates) c.votes *= alpha;
  return out;
}

std::vector<int> counts_by_party(const ElectionInstance& I,
                                 const Allocation& E) {
  std::vector<int> j(I.parties, 0);
  for (std::size_t c = 0; c < E.size(); ++c)
    if (E[c]) ++j[I.candidates[c].party];
  return j;
}

std::array<int, 2> counts_by_type(const ElectionInstance& I,
                                  const Allocation& E) {
  std::array<int, 2> t{0, 0};
  for (std::size_t c = 0; c < E.size(); ++c)
    if (E[c]) ++t[static_cast<int>(I.candidates[c].type)];
  return t;
}

std::vector<std::array<int, 2>> cross_tab(const ElectionInstance& I,
                                          const Allocation& E) {
  std::vector<std::array<int, 2>> x(I.parties, {0, 0});
  for (std::size_t c = 0; c < E.size(); ++c)
    if (E[c]) ++x[I.candidates[c].party][static_cast<int>(I.candidates[c].type)];
  return x;
}

bool supply_condition(const ElectionInstance& I) {
  int need = (I.house + 1) / 2;
  for (const auto& row : supply_matrix(I))
    if (row[0] < need || row[1] < need) return false;
  return true;
}

bool condition_A(const ElectionInstance& I, const Allocation& E) {
  std::array<int, 2> t = counts_by_type(I, E);
  return std::abs(t[0] - t[1]) == I.house % 2;
}

bool condition_B(const ElectionInstance& I, const Allocation& E,
                 const Signpost& s) {
  std::vector<int> j = counts_by_party(I, E);
  int total = std::accumulate(j.begin(), j.end(), 0);
  if (total != I.house) return false;
  return is_valid_apportionment(party_votes(I), j, s);
}

bool feasible_for(const ElectionInstance& I, const std::vector<int>& J) {
  if (static_cast<int>(J.size()) != I.parties)
    throw std::invalid_argument("J has wrong length");
  std::vector<std::array<int, 2>> s = supply_matrix(I);
  int total = 0;
  int lo = 0;  // least achievable female total
  int hi = 0;  // greatest achievable female total
  for (int i = 0; i < I.parties; ++i) {
    if (J[i] < 0) return false;
    if (J[i] > s[i][0] + s[i][1]) return false;
    total += J[i];
    lo += std::max(0, J[i] - s[i][1]);
    hi += std::min(J[i], s[i][0]);
  }
  if (total != I.house) return false;
  int want_lo = I.house / 2;
  int want_hi = (I.house + 1) / 2;
  return std::max(lo, want_lo) <= std::min(hi, want_hi);
}

std::array<int, 2> parity_marginal(const ElectionInstance& I) {
  int half = I.house / 2;
  if (I.house % 2 == 0) return {half, half};
  std::array<Rat, 2> v = type_votes(I);
  bool f_leads;
  if (v[0] != v[1])
    f_leads = v[0] > v[1];
  else
    f_leads = I.leading_tie_break == TieBreak::PreferF;
  if (f_leads) return {half + 1, half};
  return {half, half + 1};
}

}  // namespace apportion
