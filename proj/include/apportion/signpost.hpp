#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apportion/rational.hpp"

namespace apportion {

enum class SignpostKind { Jefferson, Adams, Webster, CustomTable };

// Outcome of checking the signpost axioms on a finite prefix. `property` is
// one of "a" (gamma(0) = 0), "b" (gamma(n) within [n-1, n]), "c" (left and
// right endpoints may not both be attained) or "monotone" (strict increase
// over positive indices); `index` is the first offending position.
struct SignpostValidation {
  bool ok = true;
  std::string property;
  std::size_t index = 0;
};

SignpostValidation validate_table(const std::vector<Rat>& table);

// A divisor-method rounding boundary sequence. Built-in kinds are defined for
// every index; custom tables cover a finite prefix and throw
// std::out_of_range beyond it.
class Signpost {
 public:
  static Signpost jefferson();
  static Signpost adams();
  static Signpost webster();
  // Validates the table eagerly; throws std::invalid_argument with the
  // offending axiom in the message if it is not a signpost prefix.
  static Signpost custom(std::vector<Rat> table);

  // Parses "jefferson" | "adams" | "webster"; throws std::invalid_argument
  // otherwise.
  static Signpost named(const std::string& name);

  SignpostKind kind() const { return kind_; }
  std::string name() const;
  bool is_custom() const { return kind_ == SignpostKind::CustomTable; }
  // Largest index a custom table defines; meaningless for built-ins.
  std::size_t max_index() const { return table_.size() - 1; }

  Rat value(std::size_t k) const;

  // True when gamma(1) = 0 (Adams-like methods seed every positive-vote
  // party with one seat).
  bool first_value_zero() const;

  // Integers n with gamma(n) <= t <= gamma(n+1). Size one away from
  // boundaries, size two at an attained boundary. t = 0 maps to {0}.
  std::vector<int> rounding_set(const Rat& t) const;

 private:
  Signpost(SignpostKind kind, std::vector<Rat> table)
      : kind_(kind), table_(std::move(table)) {}

  SignpostKind kind_;
  std::vector<Rat> table_;
};

// Evaluates the signpost on [0, prefix_len] and re-runs the axiom checks.
// Custom tables are checked on the part of the prefix they define.
SignpostValidation validate_signpost(const Signpost& s, std::size_t prefix_len);

}  // namespace apportion
