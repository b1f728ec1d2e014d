#pragma once

#include <cstdint>
#include <string>

namespace iso {

// Exact rational used for dataset percentages and accuracy identities.
// Counts in this tool stay far below 2^31; intermediate products go through
// __int128 so normalization and comparison never overflow.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, gcd(|num|, den) == 1

  static Rational of(std::int64_t n, std::int64_t d);
  static Rational zero() { return {}; }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational scaled(std::int64_t k) const;  // k * this

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }
};

// Fraction of correct predictions; an empty set counts as accuracy 0.
Rational accuracy(std::int64_t correct, std::int64_t total);

// part / whole * 100; a zero denominator yields 0.
Rational percentage(std::int64_t part, std::int64_t whole);

// Round half up at `decimals` places, returned as value * 10^decimals.
std::int64_t round_half_up_scaled(const Rational& r, int decimals);

// Round half up at `decimals` places, as a double (exact for table output).
double round_half_up(const Rational& r, int decimals);

// Fixed-point decimal string, round half up ("42.02", "0.00").
std::string format_fixed(const Rational& r, int decimals);

}  // namespace iso
