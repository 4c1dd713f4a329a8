#include "apportion/biprop.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"

namespace apportion {

namespace {

constexpr std::size_t kFrontierGuard = 200000;

int cap_or(const std::optional<int>& c, int fallback) {
  return c ? *c : fallback;
}

struct RowBounds {
  int lo;  // least female count the male capacity allows
  int hi;  // greatest female count supply and J allow
};

std::vector<RowBounds> row_bounds(const TwoDimInstance& T) {
  std::vector<RowBounds> b(T.J.size());
  for (std::size_t i = 0; i < T.J.size(); ++i) {
    int sf = cap_or(T.S[i][0], T.J[i]);
    int sm = cap_or(T.S[i][1], T.J[i]);
    b[i].lo = std::max(0, T.J[i] - sm);
    b[i].hi = std::min(T.J[i], sf);
  }
  return b;
}

// Cost class of raising row i's female count from k to k + 1. The underlying
// cost is log(delta(k+1) * P_im / (P_if * delta(J_i - k))); zeros in the
// ratio degenerate to the infinite classes, and 0/0 stays ambiguous.
enum class CostClass { NegInf, Finite, PosInf, Indeterminate };

struct IncCost {
  CostClass cls;
  Rat num;
  Rat den;
};

IncCost increment_cost(const TwoDimInstance& T, const Signpost& delta, int i,
                       int k) {
  Rat num = delta.value(static_cast<std::size_t>(k) + 1) * T.P[i][1];
  Rat den = T.P[i][0] * delta.value(static_cast<std::size_t>(T.J[i] - k));
  if (num > 0 && den > 0) return {CostClass::Finite, num, den};
  if (num == 0 && den > 0) return {CostClass::NegInf, num, den};
  if (num > 0 && den == 0) return {CostClass::PosInf, num, den};
  return {CostClass::Indeterminate, num, den};
}

// Rows worth branching on from state k: every cheapest next increment plus
// every ambiguous one. The verifier filters over-approximation later.
std::vector<int> branch_rows(const TwoDimInstance& T, const Signpost& delta,
                             const std::vector<RowBounds>& b,
                             const std::vector<int>& k) {
  std::vector<int> negs, poss, indets, argmin;
  std::optional<IncCost> best;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] >= b[i].hi) continue;
    IncCost c = increment_cost(T, delta, static_cast<int>(i), k[i]);
    switch (c.cls) {
      case CostClass::NegInf:
        negs.push_back(static_cast<int>(i));
        break;
      case CostClass::PosInf:
        poss.push_back(static_cast<int>(i));
        break;
      case CostClass::Indeterminate:
        indets.push_back(static_cast<int>(i));
        break;
      case CostClass::Finite: {
        if (!best) {
          best = c;
          argmin.assign(1, static_cast<int>(i));
        } else {
          Rat lhs = c.num * best->den;
          Rat rhs = best->num * c.den;
          if (lhs < rhs) {
            best = c;
            argmin.assign(1, static_cast<int>(i));
          } else if (lhs == rhs) {
            argmin.push_back(static_cast<int>(i));
          }
        }
        break;
      }
    }
  }
  std::vector<int> out;
  if (!negs.empty())
    out = negs;
  else if (!argmin.empty())
    out = argmin;
  else
    out = poss;
  out.insert(out.end(), indets.begin(), indets.end());
  return out;
}

SeatMatrix to_matrix(const TwoDimInstance& T, const std::vector<int>& k) {
  SeatMatrix x(T.J.size());
  for (std::size_t i = 0; i < T.J.size(); ++i)
    x[i] = {k[i], T.J[i] - k[i]};
  return x;
}

}  // namespace

void validate_two_dim(const TwoDimInstance& T) {
  std::size_t n = T.P.size();
  if (T.S.size() != n || T.J.size() != n)
    throw std::invalid_argument("P, S and J differ in length");
  int jsum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (T.P[i][0] < 0 || T.P[i][1] < 0)
      throw std::invalid_argument("vote matrix entries must be nonnegative");
    for (int t = 0; t < 2; ++t)
      if (T.S[i][t] && *T.S[i][t] < 0)
        throw std::invalid_argument("capacities must be nonnegative");
    if (T.J[i] < 0) throw std::invalid_argument("row targets must be nonnegative");
    jsum += T.J[i];
  }
  if (T.phi[0] < 0 || T.phi[1] < 0)
    throw std::invalid_argument("column targets must be nonnegative");
  if (jsum != T.phi[0] + T.phi[1])
    throw MarginalMismatch("row targets sum to " + std::to_string(jsum) +
                           ", column targets to " +
                           std::to_string(T.phi[0] + T.phi[1]));
}

BipropResult solve_biproportional(const TwoDimInstance& T,
                                  const Signpost& delta,
                                  std::size_t max_ties) {
  validate_two_dim(T);
  std::vector<RowBounds> b = row_bounds(T);
  int lo_sum = 0, hi_sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].lo > b[i].hi)
      throw InfeasibleError("row " + std::to_string(i) +
                            " cannot reach its seat target");
    lo_sum += b[i].lo;
    hi_sum += b[i].hi;
  }
  if (T.phi[0] < lo_sum || T.phi[0] > hi_sum)
    throw InfeasibleError("female column target outside [" +
                          std::to_string(lo_sum) + ", " +
                          std::to_string(hi_sum) + "]");

  std::vector<int> start(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) start[i] = b[i].lo;
  int steps = T.phi[0] - lo_sum;

  std::set<std::vector<int>> frontier{start};
  for (int s = 0; s < steps; ++s) {
    std::set<std::vector<int>> next;
    for (const std::vector<int>& k : frontier) {
      for (int i : branch_rows(T, delta, b, k)) {
        std::vector<int> child = k;
        ++child[i];
        next.insert(std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.size() > kFrontierGuard) throw TieExplosion(max_ties);
  }

  BipropResult res;
  for (const std::vector<int>& k : frontier) {
    SeatMatrix x = to_matrix(T, k);
    if (verify_biproportional(T, delta, x)) res.solutions.push_back(std::move(x));
  }
  // An empty set here is a real outcome: the marginals admit seat matrices
  // but none is biproportional (forced zero-vote cells, or delta(1) = 0
  // demanding a seat in every voted cell).
  if (res.solutions.size() > max_ties) throw TieExplosion(max_ties);
  res.tie = res.solutions.size() > 1;

  // Deterministic single path for tracing: lowest branchable row each step.
  std::vector<int> k = start;
  for (int s = 0; s < steps; ++s) {
    int i = branch_rows(T, delta, b, k).front();
    res.increments.push_back(i);
    ++k[i];
  }
  return res;
}

bool verify_biproportional(const TwoDimInstance& T, const Signpost& delta,
                           const SeatMatrix& x) {
  validate_two_dim(T);
  std::size_t n = T.J.size();
  if (x.size() != n) throw std::invalid_argument("x has wrong shape");

  std::array<int, 2> col{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (int t = 0; t < 2; ++t) {
      if (x[i][t] < 0) return false;
      if (T.S[i][t] && x[i][t] > *T.S[i][t]) return false;
      col[t] += x[i][t];
    }
    if (x[i][0] + x[i][1] != T.J[i]) return false;
  }
  if (col[0] != T.phi[0] || col[1] != T.phi[1]) return false;

  // Per-cell membership, for cells the cap leaves unconstrained. With
  // strictly positive multipliers a zero-vote cell rounds to 0 (to at most 1
  // when delta(1) = 0), and when delta(1) = 0 a cell with votes cannot round
  // to 0 at all.
  bool zero_first = delta.first_value_zero();
  for (std::size_t i = 0; i < n; ++i) {
    for (int t = 0; t < 2; ++t) {
      if (T.S[i][t] && x[i][t] >= *T.S[i][t]) continue;
      if (T.P[i][t] == 0 && x[i][t] > (zero_first ? 1 : 0)) return false;
      if (T.P[i][t] > 0 && zero_first && x[i][t] == 0) return false;
    }
  }

  std::vector<RowBounds> b = row_bounds(T);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (x[i][0] >= b[i].hi) continue;  // row i cannot gain a female seat
      if (x[j][0] <= b[j].lo) continue;  // row j cannot give one up
      Rat lhs = delta.value(static_cast<std::size_t>(x[i][0]) + 1) *
                delta.value(static_cast<std::size_t>(x[j][1]) + 1) *
                T.P[j][0] * T.P[i][1];
      Rat rhs = delta.value(static_cast<std::size_t>(x[j][0])) *
                delta.value(static_cast<std::size_t>(x[i][1])) * T.P[i][0] *
                T.P[j][1];
      if (lhs < rhs) return false;
    }
  }
  return true;
}

bool swap_inequalities_strict(const TwoDimInstance& T, const Signpost& delta,
                              const SeatMatrix& x) {
  if (!verify_biproportional(T, delta, x)) return false;
  std::vector<RowBounds> b = row_bounds(T);
  std::size_t n = T.J.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (x[i][0] >= b[i].hi) continue;
      if (x[j][0] <= b[j].lo) continue;
      Rat lhs = delta.value(static_cast<std::size_t>(x[i][0]) + 1) *
                delta.value(static_cast<std::size_t>(x[j][1]) + 1) *
                T.P[j][0] * T.P[i][1];
      Rat rhs = delta.value(static_cast<std::size_t>(x[j][0])) *
                delta.value(static_cast<std::size_t>(x[i][1])) * T.P[i][0] *
                T.P[j][1];
      if (lhs <= rhs) return false;
    }
  }
  return true;
}

TwoDimInstance election_two_dim(const ElectionInstance& I,
                                const std::vector<int>& J) {
  TwoDimInstance T;
  T.P = vote_matrix(I);
  for (const std::array<int, 2>& row : supply_matrix(I))
    T.S.push_back({row[0], row[1]});
  T.J = J;
  T.phi = parity_marginal(I);
  return T;
}

std::vector<BipropRun> mechanism_biprop(const ElectionInstance& I,
                                        const Signpost& party_method,
                                        const Signpost& delta,
                                        std::size_t max_ties) {
  validate_instance(I);
  CellIndex cells = cells_by_rank(I);
  std::vector<BipropRun> runs;
  for (const std::vector<int>& J :
       apportion(party_votes(I), I.house, party_method, max_ties)) {
    BipropResult r = solve_biproportional(election_two_dim(I, J), delta,
                                          max_ties);
    for (const SeatMatrix& x : r.solutions) {
      BipropRun run;
      run.J = J;
      run.x = x;
      run.alloc.assign(I.candidates.size(), 0);
      for (int i = 0; i < I.parties; ++i)
        for (int t = 0; t < 2; ++t)
          for (int idx = 0; idx < x[i][t]; ++idx)
            run.alloc[cells[i][t][idx]] = 1;
      runs.push_back(std::move(run));
      if (runs.size() > max_ties) throw TieExplosion(max_ties);
    }
  }
  return runs;
}

}  // namespace apportion
