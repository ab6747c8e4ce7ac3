#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace nalc {

// Exact rational membership degree. Bounds are compared for equality all over
// the calculus, so binary floats are never used.
class Degree {
 public:
  using rep = boost::rational<std::int64_t>;

  Degree() = default;
  Degree(std::int64_t num, std::int64_t den = 1) : value_(num, den) {}
  explicit Degree(rep r) : value_(r) {}

  static Degree zero() { return Degree(0); }
  static Degree one() { return Degree(1); }

  // "0.6", "1", ".25", "3/5". No sign, no exponent. Range is not checked here.
  static std::optional<Degree> parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const rep& value() const { return value_; }
  double to_double() const;

  bool in_unit_interval() const { return value_ >= 0 && value_ <= 1; }

  Degree complement() const { return Degree(rep(1) - value_); }
  static Degree midpoint(const Degree& a, const Degree& b);

  // "p/q" (or "p" for integers).
  std::string fraction() const;
  // Shortest exact decimal when one exists ("0.6", "0.25"), else fraction().
  std::string str() const;
  // Always decimal; rounded to 6 places when inexact.
  std::string decimal() const;

  friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend Degree operator+(const Degree& a, const Degree& b) { return Degree(a.value_ + b.value_); }
  friend Degree operator-(const Degree& a, const Degree& b) { return Degree(a.value_ - b.value_); }

 private:
  rep value_{0};
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

}  // namespace nalc

template <>
struct std::hash<nalc::Degree> {
  std::size_t operator()(const nalc::Degree& d) const noexcept {
    return std::hash<std::int64_t>{}(d.numerator()) * 31u ^ std::hash<std::int64_t>{}(d.denominator());
  }
};
