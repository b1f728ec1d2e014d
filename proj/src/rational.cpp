#include "isotool/rational.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace iso {

namespace {

using int128 = __int128;

Rational normalized(int128 n, int128 d) {
  assert(d != 0);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128 a = n < 0 ? -n : n;
  int128 g = 1;
  {
    int128 x = a, y = d;
    while (y != 0) {
      int128 t = x % y;
      x = y;
      y = t;
    }
    g = x == 0 ? 1 : x;
  }
  n /= g;
  d /= g;
  Rational r;
  r.num = static_cast<std::int64_t>(n);
  r.den = static_cast<std::int64_t>(d);
  return r;
}

}  // namespace

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  return normalized(n, d);
}

Rational Rational::operator+(const Rational& o) const {
  return normalized(int128(num) * o.den + int128(o.num) * den,
                    int128(den) * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return normalized(int128(num) * o.den - int128(o.num) * den,
                    int128(den) * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return normalized(int128(num) * o.num, int128(den) * o.den);
}

Rational Rational::scaled(std::int64_t k) const {
  return normalized(int128(num) * k, int128(den));
}

bool Rational::operator<(const Rational& o) const {
  return int128(num) * o.den < int128(o.num) * den;
}

Rational accuracy(std::int64_t correct, std::int64_t total) {
  if (total == 0) return Rational::zero();
  return Rational::of(correct, total);
}

Rational percentage(std::int64_t part, std::int64_t whole) {
  if (whole == 0) return Rational::zero();
  return Rational::of(part * 100, whole);
}

std::int64_t round_half_up_scaled(const Rational& r, int decimals) {
  int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // floor((num * scale * 2 + den) / (2 * den)) is round-half-up for num >= 0.
  int128 n = int128(r.num) * scale;
  int128 d = r.den;
  int128 q;
  if (r.num >= 0) {
    q = (2 * n + d) / (2 * d);
  } else {
    // round half up means -0.005 -> -0.00, i.e. halves move toward +inf
    q = -((-2 * n + d - 1) / (2 * d));
  }
  return static_cast<std::int64_t>(q);
}

double round_half_up(const Rational& r, int decimals) {
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  return static_cast<double>(round_half_up_scaled(r, decimals)) / scale;
}

std::string format_fixed(const Rational& r, int decimals) {
  std::int64_t scaled = round_half_up_scaled(r, decimals);
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  bool neg = scaled < 0;
  std::int64_t a = neg ? -scaled : scaled;
  std::string frac;
  if (decimals > 0) {
    std::int64_t f = a % scale;
    frac = std::to_string(f);
    frac.insert(frac.begin(), decimals - frac.size(), '0');
    frac.insert(frac.begin(), '.');
  }
  return (neg ? "-" : "") + std::to_string(a / scale) + frac;
}

}  // namespace iso
