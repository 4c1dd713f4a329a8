#include "apportion/divisor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace apportion {

namespace {

constexpr std::size_t kFrontierGuard = 200000;

struct IntervalAcc {
  Rat lo = 0;
  std::optional<Rat> hi;
  bool empty = false;

  void need_at_least(const Rat& v) {
    if (v > lo) lo = v;
  }
  void need_at_most(const Rat& v) {
    if (!hi || v < *hi) hi = v;
  }
  bool feasible() const { return !empty && (!hi || lo <= *hi); }
};

// Multiplier constraints for one seat vector: gamma(S_i) * x <= Q_i and
// Q_i <= gamma(S_i + 1) * x for every party.
IntervalAcc accumulate(const std::vector<Rat>& votes,
                       const std::vector<int>& seats, const Signpost& s) {
  IntervalAcc acc;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    if (seats[i] < 0) {
      acc.empty = true;
      return acc;
    }
    if (votes[i] == 0) {
      if (seats[i] != 0) acc.empty = true;
      continue;
    }
    Rat up = s.value(static_cast<std::size_t>(seats[i]) + 1);
    if (up == 0) {
      // Q_i > 0 can never sit below a zero signpost.
      acc.empty = true;
      return acc;
    }
    acc.need_at_least(votes[i] / up);
    if (seats[i] > 0) {
      Rat down = s.value(static_cast<std::size_t>(seats[i]));
      if (down > 0) acc.need_at_most(votes[i] / down);
    }
  }
  return acc;
}

void check_votes(const std::vector<Rat>& votes, int house) {
  if (house < 0) throw std::invalid_argument("house must be nonnegative");
  bool positive = false;
  for (const Rat& v : votes) {
    if (v < 0) throw std::invalid_argument("votes must be nonnegative");
    if (v > 0) positive = true;
  }
  if (house > 0 && !positive)
    throw std::invalid_argument("a positive house needs a positive vote");
}

}  // namespace

std::vector<std::vector<int>> apportion(const std::vector<Rat>& votes,
                                        int house, const Signpost& s,
                                        std::size_t max_ties) {
  check_votes(votes, house);
  const std::size_t n = votes.size();
  std::vector<int> base(n, 0);

  int positive = 0;
  for (const Rat& v : votes)
    if (v > 0) ++positive;

  // gamma(1) = 0 hands every positive-vote party a seat at any multiplier,
  // so the solution set is empty whenever the house is smaller. That holds
  // for an empty house too: no multiplier certifies the all-zero vector.
  if (s.first_value_zero() && house < positive)
    throw AdamsHouseTooSmall(positive, house);
  if (house == 0) return {base};

  int remaining = house;
  if (s.first_value_zero()) {
    for (std::size_t i = 0; i < n; ++i)
      if (votes[i] > 0) base[i] = 1;
    remaining = house - positive;
  }

  std::set<std::vector<int>> frontier{base};
  for (int step = 0; step < remaining; ++step) {
    std::set<std::vector<int>> next;
    for (const std::vector<int>& seats : frontier) {
      std::optional<Rat> best;
      std::vector<std::size_t> argmax;
      for (std::size_t i = 0; i < n; ++i) {
        if (votes[i] == 0) continue;
        Rat p = votes[i] / s.value(static_cast<std::size_t>(seats[i]) + 1);
        if (!best || p > *best) {
          best = p;
          argmax.assign(1, i);
        } else if (p == *best) {
          argmax.push_back(i);
        }
      }
      for (std::size_t i : argmax) {
        std::vector<int> child = seats;
        ++child[i];
        next.insert(std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.size() > kFrontierGuard) throw TieExplosion(max_ties);
  }

  if (frontier.size() > max_ties) throw TieExplosion(max_ties);
  return {frontier.begin(), frontier.end()};
}

bool is_valid_apportionment(const std::vector<Rat>& votes,
                            const std::vector<int>& seats, const Signpost& s) {
  if (votes.size() != seats.size())
    throw std::invalid_argument("votes and seats differ in length");
  for (const Rat& v : votes)
    if (v < 0) throw std::invalid_argument("votes must be nonnegative");
  return accumulate(votes, seats, s).feasible();
}

MultiplierInterval multiplier_interval(const std::vector<Rat>& votes,
                                       const std::vector<int>& seats,
                                       const Signpost& s) {
  if (votes.size() != seats.size())
    throw std::invalid_argument("votes and seats differ in length");
  IntervalAcc acc = accumulate(votes, seats, s);
  if (!acc.feasible())
    throw std::invalid_argument("not a valid apportionment");
  return {acc.lo, acc.hi};
}

}  // namespace apportion
