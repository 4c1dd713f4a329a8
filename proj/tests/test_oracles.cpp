#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"
#include "apportion/generators.hpp"
#include "apportion/oracles.hpp"

using namespace apportion;

namespace {

std::vector<std::array<std::optional<int>, 2>> caps(
    std::vector<std::array<int, 2>> v) {
  std::vector<std::array<std::optional<int>, 2>> out;
  for (const auto& row : v) out.push_back({row[0], row[1]});
  return out;
}

std::vector<std::array<std::optional<int>, 2>> open(std::size_t n) {
  return std::vector<std::array<std::optional<int>, 2>>(
      n, {std::nullopt, std::nullopt});
}

int index_of(const ElectionInstance& I, const std::string& id) {
  for (std::size_t c = 0; c < I.candidates.size(); ++c)
    if (I.candidates[c].id == id) return static_cast<int>(c);
  return -1;
}

}  // namespace

TEST_CASE("enumeration and the fast apportionment agree on pinned cases") {
  using oracles::apportion_by_enumeration;
  std::vector<Rat> votes{Rat(1200), Rat(600)};
  for (const Signpost& s :
       {Signpost::jefferson(), Signpost::adams(), Signpost::webster()}) {
    CHECK(apportion_by_enumeration(votes, 6, s) == apportion::apportion(votes, 6, s));
  }
  std::vector<Rat> tie{Rat(1), Rat(1)};
  CHECK(apportion_by_enumeration(tie, 1, Signpost::jefferson()) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("marginal matrix enumeration lists the 4/2 against 3/3 splits") {
  auto out = oracles::enumerate_marginal_matrices({4, 2}, {3, 3},
                                                  caps({{3, 3}, {3, 3}}));
  REQUIRE(out.size() == 3);
  CHECK(out[0] == SeatMatrix{{1, 3}, {2, 0}});
  CHECK(out[1] == SeatMatrix{{2, 2}, {1, 1}});
  CHECK(out[2] == SeatMatrix{{3, 1}, {0, 2}});
}

TEST_CASE("marginal matrix enumeration handles open and empty cases") {
  auto out = oracles::enumerate_marginal_matrices({1, 1}, {1, 1}, open(2));
  REQUIRE(out.size() == 2);
  CHECK(out[0] == SeatMatrix{{0, 1}, {1, 0}});
  CHECK(out[1] == SeatMatrix{{1, 0}, {0, 1}});

  // Capacity starves the female column.
  CHECK(oracles::enumerate_marginal_matrices({1, 1}, {2, 0},
                                             caps({{0, 9}, {1, 9}}))
            .empty());
  // Mismatched totals yield nothing rather than throwing here.
  CHECK(oracles::enumerate_marginal_matrices({1, 1}, {3, 0}, open(2)).empty());
  CHECK_THROWS_AS(
      oracles::enumerate_marginal_matrices({100, 100, 100}, {150, 150},
                                           open(3)),
      TooLarge);
}

TEST_CASE("feasible allocation enumeration is empty when balance is impossible") {
  ElectionInstance I = gen_fixed_election(FixedElection::Infeasible16);
  CHECK(oracles::enumerate_feasible_allocations(I, Signpost::jefferson())
            .empty());
}

TEST_CASE("feasible allocation enumeration contains the stuck repair") {
  ElectionInstance I = gen_fixed_election(FixedElection::Stuck8);
  auto all = oracles::enumerate_feasible_allocations(I, Signpost::jefferson());
  CHECK(!all.empty());
  Allocation repair(I.candidates.size(), 0);
  for (const char* id : {"c4", "c5", "c6", "c1", "c2", "c7", "c8", "c10"})
    repair[index_of(I, id)] = 1;
  CHECK(std::find(all.begin(), all.end(), repair) != all.end());
  for (const Allocation& E : all) {
    CHECK(condition_A(I, E));
    CHECK(condition_B(I, E, Signpost::jefferson()));
  }
}

TEST_CASE("feasible allocation enumeration refuses oversized instances") {
  ElectionInstance I;
  I.parties = 1;
  I.house = 1;
  for (int k = 0; k < 21; ++k)
    I.candidates.push_back(
        {"c" + std::to_string(k), 0, Ctype::F, Rat(1)});
  CHECK_THROWS_AS(oracles::enumerate_feasible_allocations(
                      I, Signpost::jefferson()),
                  TooLarge);
}

TEST_CASE("brute biproportional filters the marginal matrices") {
  ElectionInstance C = gen_fixed_election(FixedElection::Contrast6);
  TwoDimInstance T = election_two_dim(C, {4, 2});
  auto out = oracles::brute_biproportional(T, Signpost::jefferson());
  REQUIRE(out.size() == 1);
  CHECK(out[0] == SeatMatrix{{2, 2}, {1, 1}});

  TwoDimInstance sym;
  sym.P = {{1, 1}, {1, 1}};
  sym.S = open(2);
  sym.J = {1, 1};
  sym.phi = {1, 1};
  CHECK(oracles::brute_biproportional(sym, Signpost::jefferson()).size() == 2);

  // A voted cell forced to zero empties the set under gamma(1) = 0.
  TwoDimInstance forced;
  forced.P = {{1, 0}, {1, 1}};
  forced.S = open(2);
  forced.J = {1, 1};
  forced.phi = {1, 1};
  CHECK(oracles::brute_biproportional(forced, Signpost::adams()).empty());
}

TEST_CASE("the integer split oracle agrees with the closed-form test") {
  ElectionInstance inf = gen_fixed_election(FixedElection::Infeasible16);
  CHECK(!oracles::lp_feasibility_oracle(inf, {14, 2}));
  CHECK(!feasible_for(inf, {14, 2}));

  ElectionInstance stuck = gen_fixed_election(FixedElection::Stuck8);
  CHECK(oracles::lp_feasibility_oracle(stuck, {5, 3}));
  CHECK(feasible_for(stuck, {5, 3}));
  CHECK(!oracles::lp_feasibility_oracle(stuck, {5, 2}));
  CHECK(!oracles::lp_feasibility_oracle(stuck, {-1, 9}));
}
