#include "apportion/fairshare.hpp"

#include <cmath>
#include <stdexcept>

#include "apportion/errors.hpp"

namespace apportion {

namespace {

constexpr long double kSnap = 1e-9L;

// Targets this close to an integer are that integer for quota purposes.
long double snapped(long double v) {
  long double r = std::round(v);
  return std::fabs(v - r) <= kSnap ? r : v;
}

}  // namespace

FairShareResult fair_share(const TwoDimInstance& T, long double tol,
                           int max_iter) {
  validate_two_dim(T);
  std::size_t n = T.P.size();
  std::vector<std::array<long double, 2>> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int t = 0; t < 2; ++t) {
      if (T.P[i][t] <= 0)
        throw NotStrictlyPositive(static_cast<int>(i), t);
      p[i][t] = to_long_double(T.P[i][t]);
    }
  }

  FairShareResult res;
  res.row_mult.assign(n, 1.0L);
  long double residual = 0.0L;
  bool converged = false;
  for (int iter = 1; iter <= max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      if (T.J[i] == 0) {
        res.row_mult[i] = 0.0L;
        continue;
      }
      long double s = p[i][0] * res.row_mult[i] * res.col_mult[0] +
                      p[i][1] * res.row_mult[i] * res.col_mult[1];
      if (s <= 0.0L) throw NonConvergence(iter, residual);
      res.row_mult[i] *= static_cast<long double>(T.J[i]) / s;
    }
    for (int t = 0; t < 2; ++t) {
      if (T.phi[t] == 0) {
        res.col_mult[t] = 0.0L;
        continue;
      }
      long double s = 0.0L;
      for (std::size_t i = 0; i < n; ++i)
        s += p[i][t] * res.row_mult[i] * res.col_mult[t];
      if (s <= 0.0L) throw NonConvergence(iter, residual);
      res.col_mult[t] *= static_cast<long double>(T.phi[t]) / s;
    }
    residual = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      long double row = p[i][0] * res.row_mult[i] * res.col_mult[0] +
                        p[i][1] * res.row_mult[i] * res.col_mult[1];
      residual = std::max(residual, std::fabs(row - T.J[i]));
    }
    for (int t = 0; t < 2; ++t) {
      long double col = 0.0L;
      for (std::size_t i = 0; i < n; ++i)
        col += p[i][t] * res.row_mult[i] * res.col_mult[t];
      residual = std::max(residual, std::fabs(col - T.phi[t]));
    }
    res.iterations = iter;
    if (residual <= tol) {
      converged = true;
      break;
    }
  }
  res.residual = residual;
  if (!converged) throw NonConvergence(max_iter, residual);

  long double g = std::sqrt(res.col_mult[0] * res.col_mult[1]);
  if (g > 0.0L) {
    res.col_mult[0] /= g;
    res.col_mult[1] /= g;
    for (long double& l : res.row_mult) l *= g;
  }
  res.F.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int t = 0; t < 2; ++t)
      res.F[i][t] = p[i][t] * res.row_mult[i] * res.col_mult[t];
  return res;
}

bool verify_fair_share(const TwoDimInstance& T,
                       const std::vector<std::array<long double, 2>>& F,
                       long double tol) {
  validate_two_dim(T);
  std::size_t n = T.P.size();
  if (F.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    long double row = F[i][0] + F[i][1];
    if (std::fabs(row - T.J[i]) > tol) return false;
  }
  for (int t = 0; t < 2; ++t) {
    long double col = 0.0L;
    for (std::size_t i = 0; i < n; ++i) col += F[i][t];
    if (std::fabs(col - T.phi[t]) > tol) return false;
  }
  std::vector<std::array<long double, 2>> p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int t = 0; t < 2; ++t) p[i][t] = to_long_double(T.P[i][t]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      long double a = F[i][0] * F[j][1] * p[i][1] * p[j][0];
      long double b = F[i][1] * F[j][0] * p[i][0] * p[j][1];
      long double scale = std::max({std::fabs(a), std::fabs(b), 1.0L});
      if (std::fabs(a - b) > tol * scale) return false;
    }
  }
  return true;
}

std::vector<QuotaRow> quota_report(
    const SeatMatrix& x, const std::vector<std::array<long double, 2>>& F) {
  if (x.size() != F.size()) throw std::invalid_argument("shape mismatch");
  std::vector<QuotaRow> rows(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (int t = 0; t < 2; ++t) {
      long double v = snapped(F[i][t]);
      rows[i].lo[t] = static_cast<long>(std::floor(v));
      rows[i].hi[t] = static_cast<long>(std::ceil(v));
      if (x[i][t] < rows[i].lo[t])
        rows[i].dir[t] = -1;
      else if (x[i][t] > rows[i].hi[t])
        rows[i].dir[t] = 1;
      else
        rows[i].dir[t] = 0;
    }
    rows[i].within = rows[i].dir[0] == 0 && rows[i].dir[1] == 0;
  }
  return rows;
}

Rat row_violation_share(const SeatMatrix& x,
                        const std::vector<std::array<long double, 2>>& F) {
  std::vector<QuotaRow> rows = quota_report(x, F);
  if (rows.empty()) return Rat(0);
  long bad = 0;
  for (const QuotaRow& r : rows)
    if (!r.within) ++bad;
  return Rat(bad, static_cast<long>(rows.size()));
}

Rat overshoot_entry_share(const SeatMatrix& x,
                          const std::vector<std::array<long double, 2>>& F) {
  if (x.size() != F.size()) throw std::invalid_argument("shape mismatch");
  if (x.empty()) return Rat(0);
  long over = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int t = 0; t < 2; ++t)
      if (static_cast<long double>(x[i][t]) > snapped(F[i][t])) ++over;
  return Rat(over, static_cast<long>(x.size()));
}

}  // namespace apportion
