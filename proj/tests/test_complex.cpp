/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cscc/complex.hpp"
#include "cscc/complex_builder.hpp"
#include "cscc/fixtures.hpp"

using namespace cscc;

namespace {

ColoredComplex two_qubit_toy() {
  // one edge, no stabilizer structure; only used for bipartition
  ColoredComplex cx;
  cx.qubits.push_back({0, {Rational(0), Rational(0), Rational(0)}});
  cx.qubits.push_back({1, {Rational(1), Rational(0), Rational(0)}});
  cx.edges.push_back({{0, 1}, Color::R});
  return cx;
}

}  // namespace

TEST_CASE("tetrahedral fixture passes every validator") {
  ColoredComplex cx = tetrahedral15_complex();
  CHECK(cx.qubits.size() == 15);
  CHECK(cx.cells.size() == 4);
  CHECK(cx.faces.size() == 18);
  CHECK(cx.edges.size() == 28);
  for (const auto &cell : cx.cells) CHECK(cell.support.size() == 8);
  for (const auto &face : cx.faces) CHECK(face.support.size() == 4);
  ValidationReport rep = validate(cx);
  CHECK(rep.all_pass());
}

TEST_CASE("recoloring one edge trips the edge-cell consistency check") {
  ColoredComplex cx = tetrahedral15_complex();
  Color wrong = cx.edges[0].color == Color::R ? Color::G : Color::R;
  cx.edges[0].color = wrong;
  ValidationReport rep = validate(cx);
  CHECK_FALSE(rep.all_pass());
  bool found = false;
  for (const auto &c : rep.checks) {
    if (c.name == "edge-cell-color-consistency" && !c.pass) {
      found = true;
      CHECK(c.witness.find("edge 0") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("deleting a qubit from a cell trips the even-overlap check") {
  ColoredComplex cx = tetrahedral15_complex();
  // remove a qubit that some face of this cell contains, so the overlap
  // parity flips
  auto &cell = cx.cells[0];
  uint32_t victim = 0;
  bool have = false;
  for (const auto &face : cx.faces) {
    std::vector<uint32_t> inter;
    std::set_intersection(face.support.begin(), face.support.end(), cell.support.begin(),
                          cell.support.end(), std::back_inserter(inter));
    if (!inter.empty()) {
      victim = inter[0];
      have = true;
      break;
    }
  }
  REQUIRE(have);
  std::erase(cell.support, victim);
  ValidationReport rep = validate(cx);
  CHECK_FALSE(rep.all_pass());
  bool found = false;
  for (const auto &c : rep.checks) {
    if (c.name == "cell-face-even-overlap" && !c.pass) found = true;
  }
  CHECK(found);
}

TEST_CASE("bipartition of the single-edge toy complex") {
  ColoredComplex cx = two_qubit_toy();
  Bipartition bp = bipartition(cx);
  CHECK(bp.parity == std::vector<uint8_t>{0, 1});

  // flipping every parity also satisfies the no-shared-edge property
  for (const auto &e : cx.edges) {
    CHECK((1 - bp.parity[e.support[0]]) != (1 - bp.parity[e.support[1]]));
  }
}

TEST_CASE("non-bipartite adjacency is rejected") {
  ColoredComplex cx = two_qubit_toy();
  cx.qubits.push_back({2, {Rational(0), Rational(1), Rational(0)}});
  cx.edges.push_back({{1, 2}, Color::G});
  cx.edges.push_back({{0, 2}, Color::Y});
  CHECK_THROWS_AS(bipartition(cx), NotBipartiteError);
}

TEST_CASE("bipartition property on a generated cube") {
  ColoredComplex cx = build_cube({1, 1, 1});
  Bipartition bp = bipartition(cx);
  for (const auto &e : cx.edges) {
    CHECK(bp.parity[e.support[0]] != bp.parity[e.support[1]]);
  }
  CHECK(bp.parity[0] == 0);
}

TEST_CASE("complex JSON round trip is byte-stable") {
  ColoredComplex cx = tetrahedral15_complex();
  std::string a = cx.to_json().dump();
  ColoredComplex cx2 = ColoredComplex::from_json(nlohmann::json::parse(a));
  CHECK(cx2.to_json().dump() == a);
}

TEST_CASE("malformed JSON is rejected with ParseError") {
  CHECK_THROWS_AS(ColoredComplex::from_json(nlohmann::json{{"qubits", 3}}), ParseError);
  CHECK_THROWS_AS(Rational::parse("x/y"), ParseError);
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(-1, 2).str() == "-1/2");
}
