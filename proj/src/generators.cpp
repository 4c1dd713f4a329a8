#include "apportion/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace apportion {

namespace {

Int ceil_rat(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

void push_row(TwoDimInstance& T, const Rat& f, const Rat& m, int j) {
  T.P.push_back({f, m});
  T.S.push_back({std::nullopt, std::nullopt});
  T.J.push_back(j);
}

}  // namespace

int find_n(int ell, const Signpost& delta) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  Rat d1 = delta.value(1);
  if (d1 <= 0)
    throw std::invalid_argument("construction needs delta(1) > 0");
  Rat lhs = delta.value(7 + ell) * delta.value(3) * ell * ell;
  Rat d1sq = d1 * d1;
  for (int n = 1;; ++n) {
    if (d1sq * (21 * n - 7 * ell) > lhs) return n;
  }
}

HardInstance gen_gap_instance(int ell, const Signpost& delta) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  HardInstance out;
  out.ell = ell;
  if (delta.value(1) > 0) {
    int n = find_n(ell, delta);
    out.rows = n + 1;
    Rat y(ell, n);
    out.expected_F.push_back({Rat(7), Rat(ell)});
    push_row(out.instance, Rat(7) * n, Rat(ell) * n, 7 + ell);
    out.expected_x.push_back({7 + ell, 0});
    for (int i = 0; i < n; ++i) {
      out.expected_F.push_back({y, 3 - y});
      push_row(out.instance, y * n, (3 - y) * n, 3);
      out.expected_x.push_back({0, 3});
    }
    out.instance.phi = {7 + ell, 3 * n};
  } else {
    // With delta(1) = 0 a single heavy row cannot be starved of one type, so
    // the construction spreads the gap across ell + 1 light rows instead.
    out.rows = ell + 2;
    int a = ell + 1;
    Rat eps(1, a);
    out.expected_F.push_back({Rat(a), Rat(1)});
    push_row(out.instance, Rat(a) * a, Rat(a), ell + 2);
    out.expected_x.push_back({1, a});
    for (int i = 0; i < a; ++i) {
      out.expected_F.push_back({eps, 3 - eps});
      push_row(out.instance, eps * a, (3 - eps) * a, 3);
      out.expected_x.push_back({1, 2});
    }
    out.instance.phi = {ell + 2, 3 * ell + 3};
  }
  return out;
}

HardInstance gen_row_violation_instance(const Signpost& delta) {
  HardInstance out;
  Rat d1 = delta.value(1);
  if (d1 > 0) {
    int n = static_cast<int>(ceil_rat(1 / (d1 * d1) + 1).convert_to<long>());
    out.rows = n + 1;
    Rat eps(1, n);
    out.expected_F.push_back({Rat(3 * n - 1), Rat(1)});
    push_row(out.instance, Rat(3 * n - 1) * n, Rat(n), 3 * n);
    out.expected_x.push_back({3 * n, 0});
    for (int i = 0; i < n; ++i) {
      out.expected_F.push_back({eps, 3 - eps});
      push_row(out.instance, eps * n, (3 - eps) * n, 3);
      out.expected_x.push_back({0, 3});
    }
    out.instance.phi = {3 * n, 3 * n};
  } else {
    Rat d5 = delta.value(5);
    Rat d6 = delta.value(6);
    Rat den = 3 * d6 + 7 * d5;
    Rat lo = (3 * d6 - 14 * d5) / den;
    Rat hi = 21 * d5 / den;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    Rat eps = (lo + hi) / 2;
    Int alpha = denominator(eps);
    Rat a(alpha);
    out.rows = 3;
    out.expected_F.push_back({Rat(7), Rat(3)});
    out.expected_F.push_back({eps, 3 - eps});
    out.expected_F.push_back({1 - eps, 2 + eps});
    push_row(out.instance, 7 * a, 3 * a, 10);
    push_row(out.instance, eps * a, (3 - eps) * a, 3);
    push_row(out.instance, (1 - eps) * a, (2 + eps) * a, 3);
    out.expected_x = {{6, 4}, {1, 2}, {1, 2}};
    out.instance.phi = {8, 8};
  }
  return out;
}

ElectionInstance gen_fixed_election(FixedElection which) {
  ElectionInstance I;
  I.parties = 2;
  switch (which) {
    case FixedElection::Infeasible16: {
      I.house = 16;
      for (int k = 1; k <= 8; ++k)
        I.candidates.push_back({"p1f" + std::to_string(k), 0, Ctype::F, Rat(1)});
      for (int k = 1; k <= 6; ++k)
        I.candidates.push_back({"p1m" + std::to_string(k), 0, Ctype::M, Rat(1)});
      I.candidates.push_back({"p2f1", 1, Ctype::F, Rat(1)});
      I.candidates.push_back({"p2m1", 1, Ctype::M, Rat(1)});
      break;
    }
    case FixedElection::Stuck8: {
      I.house = 8;
      const int votes[12] = {4, 3, 1, 165, 164, 163, 93, 92, 91, 9, 8, 7};
      const Ctype types[12] = {Ctype::M, Ctype::M, Ctype::M, Ctype::F,
                               Ctype::F, Ctype::F, Ctype::M, Ctype::M,
                               Ctype::M, Ctype::F, Ctype::F, Ctype::F};
      for (int k = 0; k < 12; ++k)
        I.candidates.push_back({"c" + std::to_string(k + 1), k < 6 ? 0 : 1,
                                types[k], Rat(votes[k])});
      break;
    }
    case FixedElection::Contrast6: {
      I.house = 6;
      for (int k = 1; k <= 3; ++k)
        I.candidates.push_back(
            {"c1_" + std::to_string(k), 0, Ctype::F, Rat(345)});
      for (int k = 4; k <= 6; ++k)
        I.candidates.push_back(
            {"c1_" + std::to_string(k), 0, Ctype::M, Rat(55)});
      for (int k = 1; k <= 3; ++k)
        I.candidates.push_back(
            {"c2_" + std::to_string(k), 1, Ctype::F, Rat(184)});
      for (int k = 4; k <= 6; ++k)
        I.candidates.push_back(
            {"c2_" + std::to_string(k), 1, Ctype::M, Rat(16)});
      break;
    }
  }
  return I;
}

ElectionInstance gen_random_supply(std::uint64_t seed, int n, int h,
                                   int max_vote) {
  if (n < 1 || h < 1 || max_vote < 1)
    throw std::invalid_argument("need n >= 1, h >= 1, max_vote >= 1");
  std::mt19937_64 rng(seed);
  ElectionInstance I;
  I.parties = n;
  I.house = h;
  int base = (h + 1) / 2;
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < 2; ++t) {
      int count = base + static_cast<int>(rng() % 2);
      for (int k = 1; k <= count; ++k) {
        Candidate c;
        c.id = "p" + std::to_string(i + 1) + (t == 0 ? "f" : "m") +
               std::to_string(k);
        c.party = i;
        c.type = static_cast<Ctype>(t);
        c.votes = Rat(1 + static_cast<long>(rng() % max_vote));
        I.candidates.push_back(std::move(c));
      }
    }
  }
  return I;
}

}  // namespace apportion
