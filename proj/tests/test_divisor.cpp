#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"

using namespace apportion;

namespace {

std::vector<Rat> rats(std::vector<long> v) {
  return std::vector<Rat>(v.begin(), v.end());
}

// The namespace shares the function's name, so qualify once here.
std::vector<std::vector<int>> seats(const std::vector<Rat>& votes, int house,
                                    const Signpost& s,
                                    std::size_t max_ties = 64) {
  return apportion::apportion(votes, house, s, max_ties);
}

}  // namespace

TEST_CASE("a 2:1 vote split over six seats lands 4:2 under every built-in") {
  std::vector<Rat> votes = rats({1200, 600});
  std::vector<std::vector<int>> want{{4, 2}};
  CHECK(seats(votes, 6, Signpost::jefferson()) == want);
  CHECK(seats(votes, 6, Signpost::adams()) == want);
  CHECK(seats(votes, 6, Signpost::webster()) == want);
}

TEST_CASE("500/300 over eight seats gives 5:3 under every built-in") {
  std::vector<Rat> votes = rats({500, 300});
  std::vector<std::vector<int>> want{{5, 3}};
  CHECK(seats(votes, 8, Signpost::jefferson()) == want);
  CHECK(seats(votes, 8, Signpost::adams()) == want);
  CHECK(seats(votes, 8, Signpost::webster()) == want);
}

TEST_CASE("a perfect tie branches into both seat vectors") {
  auto sols = seats(rats({1, 1}), 1, Signpost::jefferson());
  std::vector<std::vector<int>> want{{0, 1}, {1, 0}};
  CHECK(sols == want);
}

TEST_CASE("tie branching respects the solution cap") {
  CHECK_THROWS_AS(seats(rats({1, 1}), 1, Signpost::jefferson(), 1),
                  TieExplosion);
}

TEST_CASE("7/3 over five seats favors the large party under jefferson") {
  auto sols = seats(rats({7, 3}), 5, Signpost::jefferson());
  CHECK(sols == std::vector<std::vector<int>>{{4, 1}});
}

TEST_CASE("zero-vote parties get zero seats") {
  auto sols = seats(rats({10, 0}), 3, Signpost::jefferson());
  CHECK(sols == std::vector<std::vector<int>>{{3, 0}});
  sols = seats(rats({0, 5, 0}), 4, Signpost::webster());
  CHECK(sols == std::vector<std::vector<int>>{{0, 4, 0}});
}

TEST_CASE("house zero seats nobody") {
  CHECK(seats(rats({5, 3}), 0, Signpost::jefferson()) ==
        std::vector<std::vector<int>>{{0, 0}});
  CHECK(seats(rats({0, 0}), 0, Signpost::jefferson()) ==
        std::vector<std::vector<int>>{{0, 0}});
  // With gamma(1) = 0 even an empty house is too small for positive votes:
  // no multiplier lets a positive-vote party sit at zero seats.
  CHECK_THROWS_AS(seats(rats({5, 3}), 0, Signpost::adams()),
                  AdamsHouseTooSmall);
}

TEST_CASE("adams refuses a house smaller than the positive-vote party count") {
  try {
    seats(rats({1, 1, 1}), 2, Signpost::adams());
    FAIL("expected AdamsHouseTooSmall");
  } catch (const AdamsHouseTooSmall& e) {
    CHECK(e.positive_parties == 3);
    CHECK(e.house == 2);
  }
  // Zero-vote parties do not count toward the seed requirement.
  CHECK(seats(rats({1, 0, 1}), 2, Signpost::adams()) ==
        std::vector<std::vector<int>>{{1, 0, 1}});
}

TEST_CASE("bad vote inputs are rejected") {
  CHECK_THROWS_AS(seats(rats({0, 0}), 3, Signpost::jefferson()),
                  std::invalid_argument);
  CHECK_THROWS_AS(seats({Rat(-1)}, 1, Signpost::jefferson()),
                  std::invalid_argument);
  CHECK_THROWS_AS(seats(rats({5}), -1, Signpost::jefferson()),
                  std::invalid_argument);
}

TEST_CASE("is_valid_apportionment checks the multiplier interval") {
  std::vector<Rat> votes = rats({1200, 600});
  CHECK(is_valid_apportionment(votes, {4, 2}, Signpost::jefferson()));
  CHECK(!is_valid_apportionment(votes, {5, 1}, Signpost::jefferson()));
  CHECK(!is_valid_apportionment(votes, {3, 3}, Signpost::jefferson()));

  // A party with all the votes may hold all the seats.
  CHECK(is_valid_apportionment(rats({5, 0}), {5, 0}, Signpost::webster()));
  // A zero-vote party may not hold a seat.
  CHECK(!is_valid_apportionment(rats({5, 0}), {4, 1}, Signpost::webster()));
  CHECK(!is_valid_apportionment(rats({5}), {-1}, Signpost::jefferson()));

  CHECK_THROWS_AS(is_valid_apportionment(votes, {4}, Signpost::jefferson()),
                  std::invalid_argument);
}

TEST_CASE("multiplier intervals match hand-solved endpoints") {
  MultiplierInterval m =
      multiplier_interval(rats({1200, 600}), {4, 2}, Signpost::jefferson());
  CHECK(m.lo == 240);
  REQUIRE(m.hi);
  CHECK(*m.hi == 300);

  m = multiplier_interval(rats({500, 300}), {5, 3}, Signpost::jefferson());
  CHECK(m.lo == Rat(500, 6));
  REQUIRE(m.hi);
  CHECK(*m.hi == 100);

  m = multiplier_interval(rats({10, 0}), {3, 0}, Signpost::jefferson());
  CHECK(m.lo == Rat(5, 2));
  REQUIRE(m.hi);
  CHECK(*m.hi == Rat(10, 3));
}

TEST_CASE("the interval is unbounded when no signpost floor binds") {
  // All-zero seat vectors only bound the multiplier from below.
  MultiplierInterval m =
      multiplier_interval(rats({5, 3}), {0, 0}, Signpost::jefferson());
  CHECK(m.lo == 5);
  CHECK(!m.hi);

  // Adams single-seat rows sit on gamma(1) = 0 and add no ceiling either.
  m = multiplier_interval(rats({7}), {1}, Signpost::adams());
  CHECK(m.lo == 7);
  CHECK(!m.hi);
}

TEST_CASE("multiplier_interval rejects invalid seat vectors") {
  CHECK_THROWS_AS(
      multiplier_interval(rats({1200, 600}), {5, 1}, Signpost::jefferson()),
      std::invalid_argument);
}

TEST_CASE("every returned seat vector verifies and sums to the house") {
  for (const Signpost& s :
       {Signpost::jefferson(), Signpost::adams(), Signpost::webster()}) {
    std::vector<Rat> votes = rats({17, 9, 4});
    for (int h = 3; h <= 9; ++h) {
      for (const std::vector<int>& sv : seats(votes, h, s)) {
        int sum = 0;
        for (int x : sv) sum += x;
        CHECK(sum == h);
        CHECK(is_valid_apportionment(votes, sv, s));
        MultiplierInterval m = multiplier_interval(votes, sv, s);
        CHECK((!m.hi || m.lo <= *m.hi));
      }
    }
  }
}
