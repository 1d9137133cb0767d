/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cscc/errors.hpp"

namespace cscc {

ColoredComplex tetrahedral15_complex() {
  // Nodes: per color, one real site (tetrahedron corner positions) and one
  // facet apex. A qubit picks real-or-facet independently per color; the
  // all-facet pick is excluded. Node encoding: color index 0..3, facet flag.
  struct Node {
    int color;
    bool facet;
    bool operator<(const Node &o) const {
      return std::tie(color, facet) < std::tie(o.color, o.facet);
    }
  };
  const Rational zero(0), one(1);
  const std::array<std::array<Rational, 3>, 4> corner{{
      {zero, zero, zero},
      {one, one, zero},
      {one, zero, one},
      {zero, one, one},
  }};

  std::vector<std::array<Node, 4>> tetra;
  for (int bits = 0; bits < 15; ++bits) {
    std::array<Node, 4> t;
    for (int c = 0; c < 4; ++c) t[c] = Node{c, ((bits >> c) & 1) != 0};
    tetra.push_back(t);
  }
  // deterministic ids: by centroid of real corners, then by facet pattern
  auto centroid = [&](const std::array<Node, 4> &t) {
    int64_t s[3] = {0, 0, 0};
    int64_t cnt = 0;
    for (const auto &nd : t) {
      if (nd.facet) continue;
      ++cnt;
      for (int i = 0; i < 3; ++i) s[i] += corner[nd.color][i].num;
    }
    return std::array<Rational, 3>{Rational(s[0], cnt), Rational(s[1], cnt),
                                   Rational(s[2], cnt)};
  };
  std::sort(tetra.begin(), tetra.end(), [&](const auto &a, const auto &b) {
    auto ca = centroid(a), cb = centroid(b);
    int na = 0, nb = 0;
    for (const auto &nd : a) na += !nd.facet;
    for (const auto &nd : b) nb += !nd.facet;
    auto ka = std::tuple(ca[0], ca[1], ca[2], na);
    auto kb = std::tuple(cb[0], cb[1], cb[2], nb);
    if (!(ka == kb)) return ka < kb;
    return a < b;
  });

  ColoredComplex cx;
  for (uint32_t i = 0; i < tetra.size(); ++i) cx.qubits.push_back({i, centroid(tetra[i])});

  std::map<Node, std::vector<uint32_t>> cell_supp, facet_supp;
  std::map<std::array<Node, 2>, std::vector<uint32_t>> face_supp;
  std::map<std::array<Node, 3>, std::vector<uint32_t>> edge_supp;
  for (uint32_t i = 0; i < tetra.size(); ++i) {
    const auto &t = tetra[i];
    for (const auto &nd : t) (nd.facet ? facet_supp : cell_supp)[nd].push_back(i);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (t[a].facet && t[b].facet) continue;
        face_supp[{t[a], t[b]}].push_back(i);
      }
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        for (int c = b + 1; c < 4; ++c) {
          if (t[a].facet && t[b].facet && t[c].facet) continue;
          edge_supp[{t[a], t[b], t[c]}].push_back(i);
        }
      }
    }
  }
  for (const auto &[nd, supp] : cell_supp) {
    cx.cells.push_back({supp, static_cast<Color>(nd.color)});
  }
  for (const auto &[pr, supp] : face_supp) {
    cx.faces.push_back(
        {supp, ColorPair(static_cast<Color>(pr[0].color), static_cast<Color>(pr[1].color))});
  }
  for (const auto &[tri, supp] : edge_supp) {
    if (supp.size() != 2) throw ConstructionError("tetrahedral fixture edge not 2-valent");
    std::set<int> present{tri[0].color, tri[1].color, tri[2].color};
    int missing = 0 + 1 + 2 + 3;
    for (int c : present) missing -= c;
    cx.edges.push_back({{supp[0], supp[1]}, static_cast<Color>(missing)});
  }
  for (const auto &[nd, supp] : facet_supp) {
    Color c = static_cast<Color>(nd.color);
    cx.boundaries.push_back({"facet-" + color_name(c), color_name(c), supp});
  }
  auto by_support = [](const auto &a, const auto &b) { return a.support < b.support; };
  std::sort(cx.edges.begin(), cx.edges.end(), by_support);
  std::sort(cx.faces.begin(), cx.faces.end(), by_support);
  std::sort(cx.cells.begin(), cx.cells.end(), by_support);
  return cx;
}

}  // namespace cscc
