#pragma once

#include <array>
#include <vector>

#include "apportion/biprop.hpp"
#include "apportion/rational.hpp"

namespace apportion {

struct FairShareResult {
  std::vector<std::array<long double, 2>> F;
  std::vector<long double> row_mult;
  std::array<long double, 2> col_mult{1.0L, 1.0L};
  int iterations = 0;
  long double residual = 0.0L;
};

// Alternating row and column scaling of P until both marginals match J and
// phi within `tol`. Capacities on T are ignored; the fair share is defined
// for the uncapacitated matrix. Requires strictly positive P. Multipliers
// are reported in the gauge with col_mult[0] * col_mult[1] = 1; only the
// products row_mult[i] * col_mult[t] are meaningful.
FairShareResult fair_share(const TwoDimInstance& T, long double tol = 1e-12L,
                           int max_iter = 100000);

// Marginals within tol and every 2x2 cross ratio of F matches that of P
// (relative tolerance against the larger product).
bool verify_fair_share(const TwoDimInstance& T,
                       const std::vector<std::array<long double, 2>>& F,
                       long double tol = 1e-9L);

// Per-row comparison of an integer seat matrix against the fair share.
// Fractional targets within 1e-9 of an integer are treated as that integer
// before flooring and ceiling. dir is -1 below quota, 0 within, +1 above.
struct QuotaRow {
  std::array<long, 2> lo{0, 0};
  std::array<long, 2> hi{0, 0};
  std::array<int, 2> dir{0, 0};
  bool within = true;
};

std::vector<QuotaRow> quota_report(
    const SeatMatrix& x, const std::vector<std::array<long double, 2>>& F);

// Fraction of rows holding at least one entry outside its quota bracket.
Rat row_violation_share(const SeatMatrix& x,
                        const std::vector<std::array<long double, 2>>& F);

// Fraction counting every entry that strictly exceeds its fair share.
// A diagnostic companion to row_violation_share; it can exceed one.
Rat overshoot_entry_share(const SeatMatrix& x,
                          const std::vector<std::array<long double, 2>>& F);

}  // namespace apportion
