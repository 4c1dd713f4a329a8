#include "apportion/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace apportion {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) return std::nullopt;

  Rat value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    if (dot != std::string::npos) return std::nullopt;
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    value = Rat(Int(num), d);
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int units = whole.empty() ? Int(0) : Int(whole);
    Int cents = frac.empty() ? Int(0) : Int(frac);
    value = Rat(units * scale + cents, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rat(Int(body));
  }
  if (neg) value = -value;
  return value;
}

std::string format_rational(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

long double to_long_double(const Rat& r) { return r.convert_to<long double>(); }

}  // namespace apportion
