#include <doctest.h>

#include "property_suites.hpp"

// Reduced trial counts here; the acceptance runner repeats the same suites
// at 200 seeds. INFO carries the first failing case into the test log.

TEST_CASE("divisor axioms hold on random vote vectors") {
  suites::Outcome o = suites::divisor_axioms(60);
  INFO(o.detail);
  CHECK(o.ok);
  CHECK(o.cases > 0);
}

TEST_CASE("greedy mechanism axioms hold on random supply instances") {
  suites::Outcome o = suites::greedy_axioms(40);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("biproportional mechanism axioms hold on random supply instances") {
  suites::Outcome o = suites::biprop_axioms(30);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("greedy output maximizes prefix then votes") {
  suites::Outcome o = suites::prefix_optimality(30);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("solvers match their brute-force enumerations") {
  suites::Outcome o = suites::solver_vs_oracle(60);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("feasibility closed form matches the exhaustive search") {
  suites::Outcome o = suites::feasibility_agreement(60);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("2x2 solutions stay within the fair-share brackets") {
  suites::Outcome o = suites::fairshare_quota(60);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("row and column pre-scalings do not move the fitted matrix") {
  suites::Outcome o = suites::ipf_uniqueness(25);
  INFO(o.detail);
  CHECK(o.ok);
}
