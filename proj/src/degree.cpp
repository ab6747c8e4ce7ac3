#include "nalc/degree.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace nalc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Degree> Degree::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) return std::nullopt;
    auto num = to_int(p), den = to_int(q);
    if (!num || !den || *den == 0) return std::nullopt;
    return Degree(*num, *den);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac)) return std::nullopt;
  // keep products within int64
  if (frac.size() > 9 || whole.size() > 9) return std::nullopt;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::int64_t w = whole.empty() ? 0 : *to_int(whole);
  std::int64_t f = frac.empty() ? 0 : *to_int(frac);
  return Degree(w * den + f, den);
}

double Degree::to_double() const {
  return static_cast<double>(value_.numerator()) / static_cast<double>(value_.denominator());
}

Degree Degree::midpoint(const Degree& a, const Degree& b) {
  return Degree((a.value_ + b.value_) / rep(2));
}

std::string Degree::fraction() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

std::string Degree::str() const {
  std::int64_t den = value_.denominator();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1 || std::max(twos, fives) > 12) return fraction();
  return decimal();
}

std::string Degree::decimal() const {
  std::int64_t num = value_.numerator(), den = value_.denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  std::string out = (neg ? "-" : "") + std::to_string(num / den);
  std::int64_t rem = num % den;
  if (rem == 0) return out;
  out += '.';
  for (int i = 0; i < 12 && rem != 0; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  if (rem != 0) {
    // inexact: round to 6 places
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", to_double());
    return buf;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

}  // namespace nalc
