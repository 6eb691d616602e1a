#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace argrank {

// Exact rational on 64-bit components, always normalized (positive
// denominator, reduced). Magnitudes here stay tiny; overflow is not a
// practical concern for the measures this library computes.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  Rational operator+(const Rational& other) const;
  Rational operator*(const Rational& other) const;

  bool operator==(const Rational& other) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  double to_double() const { return static_cast<double>(num) / den; }

  // "a/b", or just "a" for integers.
  std::string str() const;
};

}  // namespace argrank
