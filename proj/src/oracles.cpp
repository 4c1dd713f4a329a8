#include "apportion/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"

namespace apportion::oracles {

namespace {

constexpr long kRangeGuard = 1000000;

void compositions(int slots, int total, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == slots - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(slots, total - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> apportion_by_enumeration(
    const std::vector<Rat>& votes, int house, const Signpost& s) {
  if (votes.empty()) return {};
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  compositions(static_cast<int>(votes.size()), house, cur, all);
  std::vector<std::vector<int>> good;
  for (const std::vector<int>& seats : all)
    if (is_valid_apportionment(votes, seats, s)) good.push_back(seats);
  std::sort(good.begin(), good.end());
  return good;
}

std::vector<Allocation> enumerate_feasible_allocations(
    const ElectionInstance& I, const Signpost& s) {
  validate_instance(I);
  std::size_t m = I.candidates.size();
  if (m > 20)
    throw TooLarge(std::to_string(m) + " candidates");
  std::vector<Rat> Q = party_votes(I);
  std::vector<Allocation> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != I.house) continue;
    std::vector<int> counts(I.parties, 0);
    int f = 0, mm = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (mask & (1u << c)) {
        ++counts[I.candidates[c].party];
        if (I.candidates[c].type == Ctype::F)
          ++f;
        else
          ++mm;
      }
    }
    if (std::abs(f - mm) != I.house % 2) continue;
    if (!is_valid_apportionment(Q, counts, s)) continue;
    Allocation E(m, 0);
    for (std::size_t c = 0; c < m; ++c)
      if (mask & (1u << c)) E[c] = 1;
    out.push_back(std::move(E));
  }
  return out;
}

std::vector<SeatMatrix> enumerate_marginal_matrices(
    const std::vector<int>& J, std::array<int, 2> phi,
    const std::vector<std::array<std::optional<int>, 2>>& S) {
  std::size_t n = J.size();
  if (S.size() != n) throw std::invalid_argument("S has wrong length");
  std::vector<int> lo(n), hi(n);
  long product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (J[i] < 0) return {};
    int sf = S[i][0] ? *S[i][0] : J[i];
    int sm = S[i][1] ? *S[i][1] : J[i];
    lo[i] = std::max(0, J[i] - sm);
    hi[i] = std::min(J[i], sf);
    if (lo[i] > hi[i]) return {};
    product *= hi[i] - lo[i] + 1;
    if (product > kRangeGuard) throw TooLarge("row range product");
  }
  if (std::accumulate(J.begin(), J.end(), 0) != phi[0] + phi[1]) return {};

  std::vector<SeatMatrix> out;
  std::vector<int> k(n);
  // DFS over female counts per row; prune on reachable column totals.
  std::vector<int> lo_suffix(n + 1, 0), hi_suffix(n + 1, 0);
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    lo_suffix[i] = lo_suffix[i + 1] + lo[i];
    hi_suffix[i] = hi_suffix[i + 1] + hi[i];
  }
  std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int used) {
    if (i == n) {
      if (used == phi[0]) {
        SeatMatrix x(n);
        for (std::size_t r = 0; r < n; ++r) x[r] = {k[r], J[r] - k[r]};
        out.push_back(std::move(x));
      }
      return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
      int next = used + v;
      if (next + lo_suffix[i + 1] > phi[0]) break;
      if (next + hi_suffix[i + 1] < phi[0]) continue;
      k[i] = v;
      dfs(i + 1, next);
    }
  };
  dfs(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SeatMatrix> brute_biproportional(const TwoDimInstance& T,
                                             const Signpost& delta) {
  std::vector<SeatMatrix> out;
  for (const SeatMatrix& x : enumerate_marginal_matrices(T.J, T.phi, T.S))
    if (verify_biproportional(T, delta, x)) out.push_back(x);
  return out;
}

bool lp_feasibility_oracle(const ElectionInstance& I,
                           const std::vector<int>& J) {
  if (static_cast<int>(J.size()) != I.parties)
    throw std::invalid_argument("J has wrong length");
  int total = 0;
  for (int j : J) {
    if (j < 0) return false;
    total += j;
  }
  if (total != I.house) return false;
  std::vector<std::array<int, 2>> S = supply_matrix(I);
  std::vector<int> lo(I.parties), hi(I.parties);
  long product = 1;
  for (int i = 0; i < I.parties; ++i) {
    lo[i] = std::max(0, J[i] - S[i][1]);
    hi[i] = std::min(J[i], S[i][0]);
    if (lo[i] > hi[i]) return false;
    product *= hi[i] - lo[i] + 1;
    if (product > kRangeGuard) throw TooLarge("row range product");
  }
  int need = I.house / 2;
  std::function<bool(int, int)> dfs = [&](int i, int f) -> bool {
    if (i == I.parties) return f >= need && total - f >= need;
    for (int v = lo[i]; v <= hi[i]; ++v)
      if (dfs(i + 1, f + v)) return true;
    return false;
  };
  return dfs(0, 0);
}

}  // namespace apportion::oracles
