#pragma once

#include <cstdint>
#include <string>

#include "ldve/error.hpp"

namespace ldve {

// Exact frame-rate representation, e.g. 24000:1001 for NTSC film rates.
struct Rational {
  std::int64_t num = 30;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

inline std::string to_string(const Rational& r) {
  return std::to_string(r.num) + ":" + std::to_string(r.den);
}

// Parses "num:den" (both >= 1). Used for Y4M "F" tokens and config values.
Rational parse_rational(const std::string& text);

}  // namespace ldve
