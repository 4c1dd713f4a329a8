#pragma once

#include <stdexcept>
#include <string>

namespace apportion {

// Raised when an Adams-style method (first signpost value zero) seeds one
// seat per positive-vote party but the house is too small to do so.
struct AdamsHouseTooSmall : std::runtime_error {
  int positive_parties;
  int house;
  AdamsHouseTooSmall(int parties, int h)
      : std::runtime_error("house of " + std::to_string(h) +
                           " cannot seat all " + std::to_string(parties) +
                           " positive-vote parties"),
        positive_parties(parties),
        house(h) {}
};

// Tie branching produced more distinct solutions than the configured cap.
struct TieExplosion : std::runtime_error {
  std::size_t cap;
  explicit TieExplosion(std::size_t c)
      : std::runtime_error("tie branching exceeded cap of " +
                           std::to_string(c) + " solutions"),
        cap(c) {}
};

// Parity correction ran out of replacement candidates. `party` is the party
// whose lowest-ranked over-represented candidate was being swapped out and
// `removed_candidate` is that candidate's index in the instance.
struct StuckError : std::runtime_error {
  int party;
  int removed_candidate;
  StuckError(int p, int c)
      : std::runtime_error("no replacement candidate left in party " +
                           std::to_string(p)),
        party(p),
        removed_candidate(c) {}
};

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& why)
      : std::runtime_error("infeasible: " + why) {}
};

struct MarginalMismatch : std::runtime_error {
  explicit MarginalMismatch(const std::string& why)
      : std::runtime_error("marginal mismatch: " + why) {}
};

struct NotStrictlyPositive : std::runtime_error {
  int row;
  int col;
  NotStrictlyPositive(int r, int c)
      : std::runtime_error("matrix entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") is not strictly positive"),
        row(r),
        col(c) {}
};

struct NonConvergence : std::runtime_error {
  long double residual;
  NonConvergence(int iters, long double res)
      : std::runtime_error("iteration cap of " + std::to_string(iters) +
                           " reached before the residual target"),
        residual(res) {}
};

// Brute-force enumeration refused an input above its size guard.
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& why)
      : std::runtime_error("instance too large for exhaustive search: " + why) {
  }
};

}  // namespace apportion
