/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_RATIONAL_HPP_
#define CSCC_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

#include "cscc/errors.hpp"

namespace cscc {

/// Exact rational with small operands. Coordinates in this project are
/// multiples of 1/2 (lattice sites) or centroids thereof, so int64 never
/// comes close to overflow.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }
  explicit Rational(int64_t n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational &o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational &o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational &o) const { return !(o < *this); }

  Rational operator+(const Rational &o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational &o) const { return {num * o.den - o.num * den, den * o.den}; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  static Rational parse(const std::string &s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception &) {
      throw ParseError("not a rational: '" + s + "'");
    }
  }
};

}  // namespace cscc

#endif  // CSCC_RATIONAL_HPP_
