#include "apportion/signpost.hpp"

#include <stdexcept>

namespace apportion {

namespace {

// Shared by validate_table and validate_signpost once values are materialized.
SignpostValidation check_values(const std::vector<Rat>& g) {
  SignpostValidation v;
  bool left_touch = false;   // gamma(k) = k-1 for some k >= 2
  bool right_touch = false;  // gamma(m) = m for some m >= 1
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == 0) {
      if (g[0] != 0) return {false, "a", 0};
      continue;
    }
    if (g[k] < Rat(static_cast<long>(k) - 1) || g[k] > Rat(static_cast<long>(k)))
      return {false, "b", k};
    if (k >= 2 && g[k] <= g[k - 1]) return {false, "monotone", k};
    if (k >= 2 && g[k] == Rat(static_cast<long>(k) - 1)) left_touch = true;
    if (g[k] == Rat(static_cast<long>(k))) right_touch = true;
    if (left_touch && right_touch) return {false, "c", k};
  }
  return v;
}

}  // namespace

SignpostValidation validate_table(const std::vector<Rat>& table) {
  if (table.size() < 2) return {false, "a", 0};
  return check_values(table);
}

Signpost Signpost::jefferson() { return Signpost(SignpostKind::Jefferson, {}); }
Signpost Signpost::adams() { return Signpost(SignpostKind::Adams, {}); }
Signpost Signpost::webster() { return Signpost(SignpostKind::Webster, {}); }

Signpost Signpost::custom(std::vector<Rat> table) {
  SignpostValidation v = validate_table(table);
  if (!v.ok)
    throw std::invalid_argument("not a signpost table: property " + v.property +
                                " fails at index " + std::to_string(v.index));
  return Signpost(SignpostKind::CustomTable, std::move(table));
}

Signpost Signpost::named(const std::string& name) {
  if (name == "jefferson") return jefferson();
  if (name == "adams") return adams();
  if (name == "webster") return webster();
  throw std::invalid_argument("unknown method name: " + name);
}

std::string Signpost::name() const {
  switch (kind_) {
    case SignpostKind::Jefferson: return "jefferson";
    case SignpostKind::Adams: return "adams";
    case SignpostKind::Webster: return "webster";
    case SignpostKind::CustomTable: return "custom";
  }
  return "custom";
}

Rat Signpost::value(std::size_t k) const {
  switch (kind_) {
    case SignpostKind::Jefferson:
      return Rat(static_cast<long>(k));
    case SignpostKind::Adams:
      return k == 0 ? Rat(0) : Rat(static_cast<long>(k) - 1);
    case SignpostKind::Webster:
      return k == 0 ? Rat(0) : Rat(2 * static_cast<long>(k) - 1, 2);
    case SignpostKind::CustomTable:
      if (k >= table_.size())
        throw std::out_of_range("signpost table has no entry " +
                                std::to_string(k));
      return table_[k];
  }
  throw std::logic_error("unreachable");
}

bool Signpost::first_value_zero() const { return value(1) == 0; }

std::vector<int> Signpost::rounding_set(const Rat& t) const {
  if (t < 0) throw std::invalid_argument("rounding_set needs t >= 0");
  if (t == 0) return {0};
  // gamma(n) <= t <= gamma(n+1) forces n within one of floor(t), so probing a
  // three-wide window suffices.
  Int fl = numerator(t) / denominator(t);
  long f = fl.convert_to<long>();
  for (long n = std::max(0L, f - 1); n <= f + 1; ++n) {
    Rat lo = value(static_cast<std::size_t>(n));
    Rat hi = value(static_cast<std::size_t>(n) + 1);
    if (lo <= t && t <= hi) {
      if (t == lo) return {static_cast<int>(n) - 1, static_cast<int>(n)};
      if (t == hi) return {static_cast<int>(n), static_cast<int>(n) + 1};
      return {static_cast<int>(n)};
    }
  }
  throw std::logic_error("no rounding bracket found");
}

SignpostValidation validate_signpost(const Signpost& s, std::size_t prefix_len) {
  std::size_t top = prefix_len;
  if (s.is_custom() && s.max_index() < top) top = s.max_index();
  std::vector<Rat> g;
  g.reserve(top + 1);
  for (std::size_t k = 0; k <= top; ++k) g.push_back(s.value(k));
  return check_values(g);
}

}  // namespace apportion
