/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef CSCC_COLOR_HPP_
#define CSCC_COLOR_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "cscc/errors.hpp"

namespace cscc {

/// The four cell colors, totally ordered r < g < y < b.
enum class Color : uint8_t { R = 0, G = 1, Y = 2, B = 3 };

constexpr std::array<Color, 4> kColors{Color::R, Color::G, Color::Y, Color::B};

inline char color_char(Color c) {
  return "rgyb"[static_cast<int>(c)];
}

inline std::string color_name(Color c) {
  return std::string(1, color_char(c));
}

inline Color parse_color(const std::string &s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'r': return Color::R;
      case 'g': return Color::G;
      case 'y': return Color::Y;
      case 'b': return Color::B;
    }
  }
  throw ParseError("not a color: '" + s + "'");
}

/// Unordered color pair, stored sorted.
struct ColorPair {
  Color a, b;

  ColorPair(Color x, Color y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool contains(Color c) const { return c == a || c == b; }
  bool operator==(const ColorPair &o) const = default;
  auto operator<=>(const ColorPair &o) const = default;

  std::string str() const { return {color_char(a), color_char(b)}; }

  static ColorPair parse(const std::string &s) {
    if (s.size() != 2) throw ParseError("not a color pair: '" + s + "'");
    return {parse_color(s.substr(0, 1)), parse_color(s.substr(1, 2))};
  }
};

}  // namespace cscc

#endif  // CSCC_COLOR_HPP_
