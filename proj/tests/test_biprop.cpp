#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "apportion/biprop.hpp"
#include "apportion/errors.hpp"
#include "apportion/generators.hpp"

using namespace apportion;

namespace {

TwoDimInstance plain(std::vector<std::array<Rat, 2>> P, std::vector<int> J,
                     std::array<int, 2> phi) {
  TwoDimInstance T;
  T.P = std::move(P);
  T.S.assign(T.P.size(), {std::nullopt, std::nullopt});
  T.J = std::move(J);
  T.phi = phi;
  return T;
}

}  // namespace

TEST_CASE("validate_two_dim checks shapes, signs and marginal totals") {
  TwoDimInstance T = plain({{1, 2}, {3, 4}}, {1, 1}, {1, 1});
  CHECK_NOTHROW(validate_two_dim(T));

  TwoDimInstance off = T;
  off.phi = {2, 1};
  CHECK_THROWS_AS(validate_two_dim(off), MarginalMismatch);

  off = T;
  off.J.pop_back();
  CHECK_THROWS_AS(validate_two_dim(off), std::invalid_argument);

  off = T;
  off.P[0][1] = -1;
  CHECK_THROWS_AS(validate_two_dim(off), std::invalid_argument);

  off = T;
  off.S[1][0] = -2;
  CHECK_THROWS_AS(validate_two_dim(off), std::invalid_argument);
}

TEST_CASE("a fully symmetric instance ties both diagonal splits") {
  TwoDimInstance T = plain({{1, 1}, {1, 1}}, {1, 1}, {1, 1});
  BipropResult r = solve_biproportional(T, Signpost::jefferson());
  REQUIRE(r.solutions.size() == 2);
  CHECK(r.tie);
  CHECK(r.solutions[0] == SeatMatrix{{0, 1}, {1, 0}});
  CHECK(r.solutions[1] == SeatMatrix{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(solve_biproportional(T, Signpost::jefferson(), 1),
                  TieExplosion);
}

TEST_CASE("the designed gap instance has its designed unique solution") {
  HardInstance H = gen_gap_instance(1, Signpost::jefferson());
  BipropResult r = solve_biproportional(H.instance, Signpost::jefferson());
  REQUIRE(r.solutions.size() == 1);
  CHECK(!r.tie);
  CHECK(r.solutions[0] == H.expected_x);
  CHECK(swap_inequalities_strict(H.instance, Signpost::jefferson(),
                                 H.expected_x));
  // Row 0 stays the cheapest female increment throughout.
  CHECK(r.increments == std::vector<int>(8, 0));
}

TEST_CASE("verify accepts members and rejects near misses") {
  HardInstance H = gen_gap_instance(1, Signpost::jefferson());
  CHECK(verify_biproportional(H.instance, Signpost::jefferson(), H.expected_x));
  // Same marginals, one female seat shifted from row 0 to row 1.
  SeatMatrix shifted{{7, 1}, {1, 2}, {0, 3}};
  CHECK(!verify_biproportional(H.instance, Signpost::jefferson(), shifted));
  // Broken column total.
  SeatMatrix off{{8, 0}, {1, 2}, {0, 3}};
  CHECK(!verify_biproportional(H.instance, Signpost::jefferson(), off));
  // Broken row total.
  SeatMatrix row{{8, 1}, {0, 2}, {0, 3}};
  CHECK(!verify_biproportional(H.instance, Signpost::jefferson(), row));
  CHECK_THROWS_AS(
      verify_biproportional(H.instance, Signpost::jefferson(), {{8, 0}}),
      std::invalid_argument);
}

TEST_CASE("a seat never lands on a zero-vote cell when gamma(1) > 0") {
  TwoDimInstance T = plain({{1, 0}, {1, 1}}, {1, 1}, {1, 1});
  CHECK(!verify_biproportional(T, Signpost::jefferson(),
                               {{0, 1}, {1, 0}}));
  CHECK(verify_biproportional(T, Signpost::jefferson(), {{1, 0}, {0, 1}}));
  BipropResult r = solve_biproportional(T, Signpost::jefferson());
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == SeatMatrix{{1, 0}, {0, 1}});
}

TEST_CASE("with gamma(1) = 0 every voted cell needs a seat") {
  // Both marginal-feasible matrices leave some voted cell at zero seats, so
  // the solution set is empty.
  TwoDimInstance T = plain({{1, 0}, {1, 1}}, {1, 1}, {1, 1});
  CHECK(!verify_biproportional(T, Signpost::adams(), {{1, 0}, {0, 1}}));
  CHECK(!verify_biproportional(T, Signpost::adams(), {{0, 1}, {1, 0}}));
  BipropResult r = solve_biproportional(T, Signpost::adams());
  CHECK(r.solutions.empty());
  CHECK(!r.tie);
}

TEST_CASE("a zero-vote cell may still hold one seat when gamma(1) = 0") {
  TwoDimInstance T = plain({{1, 0}, {0, 1}}, {1, 1}, {1, 1});
  CHECK(verify_biproportional(T, Signpost::adams(), {{1, 0}, {0, 1}}));
  BipropResult r = solve_biproportional(T, Signpost::adams());
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == SeatMatrix{{1, 0}, {0, 1}});
  // The pairwise products degenerate to 0 >= 0 here, so strictness fails
  // even though the solution is unique.
  CHECK(!swap_inequalities_strict(T, Signpost::adams(), r.solutions[0]));
}

TEST_CASE("one seat per positive row under adams") {
  TwoDimInstance T = plain({{2, 1}, {1, 2}}, {2, 2}, {2, 2});
  BipropResult r = solve_biproportional(T, Signpost::adams());
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == SeatMatrix{{1, 1}, {1, 1}});
}

TEST_CASE("capacities clamp the split") {
  TwoDimInstance T = plain({{1, 1}, {1, 1}}, {1, 1}, {1, 1});
  T.S[0][0] = 0;  // row 0 may seat no females
  BipropResult r = solve_biproportional(T, Signpost::jefferson());
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == SeatMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("infeasible marginals raise InfeasibleError") {
  TwoDimInstance row = plain({{1, 1}}, {1}, {1, 0});
  row.S[0] = {0, 0};
  CHECK_THROWS_AS(solve_biproportional(row, Signpost::jefferson()),
                  InfeasibleError);

  TwoDimInstance col = plain({{1, 1}, {1, 1}}, {1, 1}, {2, 0});
  col.S[0][0] = 0;
  CHECK_THROWS_AS(solve_biproportional(col, Signpost::jefferson()),
                  InfeasibleError);
}

TEST_CASE("forced zero-vote cells can empty the solution set entirely") {
  TwoDimInstance T = plain({{0, 0}, {1, 1}}, {1, 1}, {1, 1});
  BipropResult r = solve_biproportional(T, Signpost::jefferson());
  CHECK(r.solutions.empty());
}

TEST_CASE("election_two_dim assembles votes, supplies and parity targets") {
  ElectionInstance I = gen_fixed_election(FixedElection::Contrast6);
  TwoDimInstance T = election_two_dim(I, {4, 2});
  CHECK(T.P[0] == std::array<Rat, 2>{Rat(1035), Rat(165)});
  CHECK(T.P[1] == std::array<Rat, 2>{Rat(552), Rat(48)});
  CHECK(T.S[0] == std::array<std::optional<int>, 2>{3, 3});
  CHECK(T.J == std::vector<int>{4, 2});
  CHECK(T.phi == std::array<int, 2>{3, 3});
}

TEST_CASE("the two-party contrast election splits 2+2 and 1+1") {
  ElectionInstance I = gen_fixed_election(FixedElection::Contrast6);
  auto runs =
      mechanism_biprop(I, Signpost::jefferson(), Signpost::jefferson());
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].J == std::vector<int>{4, 2});
  CHECK(runs[0].x == SeatMatrix{{2, 2}, {1, 1}});
  Allocation want(I.candidates.size(), 0);
  for (std::size_t c = 0; c < I.candidates.size(); ++c) {
    const std::string& id = I.candidates[c].id;
    if (id == "c1_1" || id == "c1_2" || id == "c1_4" || id == "c1_5" ||
        id == "c2_1" || id == "c2_4")
      want[c] = 1;
  }
  CHECK(runs[0].alloc == want);
}

TEST_CASE("the infeasible fixture is infeasible for the biprop mechanism") {
  ElectionInstance I = gen_fixed_election(FixedElection::Infeasible16);
  CHECK_THROWS_AS(
      mechanism_biprop(I, Signpost::jefferson(), Signpost::jefferson()),
      InfeasibleError);
}
