/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/complex_builder.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "cscc/errors.hpp"

// The lattice is built in its dual picture: a body-centered-cubic
// tetrahedralization, working in doubled integer coordinates so that every
// site is exact. Cubic sublattice sites have all-even coordinates and split
// into r/g by coordinate-sum parity; body centers have all-odd coordinates
// and split into y/b by integer-part-sum parity. Each disphenoid tetrahedron
// (a cubic nearest-neighbor edge interlocked with a perpendicular body-center
// edge) then touches one site of each color.
//
// Primal translation: qubits are tetrahedra, cells are dual sites, faces are
// dual edges, lattice edges are dual triangles.
//
// Each color class is clipped by one half-space pair, which realizes the
// boundary layout (x: blue, y: red, z-: green, z+: yellow). The clipped chunk
// is closed by coning its boundary surface onto one virtual site per facet:
// every surface triangle gains a cone qubit, facet-transition surface edges
// gain wedge qubits, and box corners where three facet regions meet around a
// surface vertex gain corner qubits.

namespace cscc {

namespace {

using IVec = std::array<int, 3>;

enum class Facet : uint8_t { XMinus, XPlus, YMinus, YPlus, ZMinus, ZPlus };

constexpr const char *kFacetNames[6] = {"x-", "x+", "y-", "y+", "z-", "z+"};
constexpr Color kFacetColors[6] = {Color::B, Color::B, Color::R,
                                   Color::R, Color::G, Color::Y};

Color site_color(const IVec &v) {
  if (v[0] % 2 == 0) {
    int s = (v[0] + v[1] + v[2]) / 2;
    return (s % 2 + 2) % 2 == 0 ? Color::R : Color::G;
  }
  int s = (v[0] - 1) / 2 + (v[1] - 1) / 2 + (v[2] - 1) / 2;
  return (s % 2 + 2) % 2 == 0 ? Color::Y : Color::B;
}

/// A dual site or a facet's virtual apex.
struct Node {
  bool mega;
  IVec p;        // valid when !mega
  Facet facet;   // valid when mega

  auto key() const {
    return std::tuple(mega, mega ? IVec{0, 0, 0} : p, mega ? facet : Facet::XMinus);
  }
  bool operator<(const Node &o) const { return key() < o.key(); }
  bool operator==(const Node &o) const { return key() == o.key(); }
};

Node real_node(const IVec &p) { return Node{false, p, Facet::XMinus}; }
Node mega_node(Facet f) { return Node{true, {0, 0, 0}, f}; }

Color node_color(const Node &n) {
  return n.mega ? kFacetColors[static_cast<int>(n.facet)] : site_color(n.p);
}

using Tetra = std::array<Node, 4>;  // sorted

Tetra make_tetra(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  return Tetra{nodes[0], nodes[1], nodes[2], nodes[3]};
}

struct Lattice {
  Extent extent;

  // class box: blue x in [1, 2Lx+1], red y in [0, 2Ly],
  //            green z >= 0, yellow z <= 2Lz-1
  bool real(const IVec &v) const {
    switch (site_color(v)) {
      case Color::B: return 1 <= v[0] && v[0] <= 2 * static_cast<int>(extent[0]) + 1;
      case Color::R: return 0 <= v[1] && v[1] <= 2 * static_cast<int>(extent[1]);
      case Color::G: return v[2] >= 0;
      case Color::Y: return v[2] <= 2 * static_cast<int>(extent[2]) - 1;
    }
    return false;
  }

  Facet facet_of(const IVec &v) const {
    switch (site_color(v)) {
      case Color::B: return v[0] < 1 ? Facet::XMinus : Facet::XPlus;
      case Color::R: return v[1] < 0 ? Facet::YMinus : Facet::YPlus;
      case Color::G: return Facet::ZMinus;
      case Color::Y: return Facet::ZPlus;
    }
    return Facet::XMinus;
  }
};

using Triangle = std::array<IVec, 3>;  // sorted real sites

Triangle make_triangle(std::vector<IVec> vs) {
  std::sort(vs.begin(), vs.end());
  return Triangle{vs[0], vs[1], vs[2]};
}

/// Given a BCC triangle and the fourth vertex of one containing tetrahedron,
/// the fourth vertex of the other.
std::optional<IVec> other_completion(const Triangle &tri, const IVec &v_in) {
  std::vector<IVec> cubic, body;
  for (const auto &v : tri) (v[0] % 2 == 0 ? cubic : body).push_back(v);
  auto adjacent = [](const IVec &a, const IVec &b) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(a[i] - b[i]) != 1) return false;
    }
    return true;
  };
  std::vector<IVec> outs;
  if (cubic.size() == 2) {
    // completions are body partners of the single body vertex
    const IVec &y = body[0];
    int a = 0;
    for (int i = 0; i < 3; ++i) {
      if (cubic[0][i] != cubic[1][i]) a = i;
    }
    for (int d = 0; d < 3; ++d) {
      if (d == a) continue;
      for (int sg : {2, -2}) {
        IVec cand = y;
        cand[d] += sg;
        if (adjacent(cand, cubic[0]) && adjacent(cand, cubic[1])) outs.push_back(cand);
      }
    }
  } else {
    const IVec &g = cubic[0];
    int d = 0;
    for (int i = 0; i < 3; ++i) {
      if (body[0][i] != body[1][i]) d = i;
    }
    for (int a = 0; a < 3; ++a) {
      if (a == d) continue;
      for (int sg : {2, -2}) {
        IVec cand = g;
        cand[a] += sg;
        if (adjacent(cand, body[0]) && adjacent(cand, body[1])) outs.push_back(cand);
      }
    }
  }
  std::erase(outs, v_in);
  if (outs.size() != 1) return std::nullopt;
  return outs[0];
}

std::set<Tetra> enumerate_qubit_tetra(const Lattice &lat) {
  const int hi[3] = {2 * static_cast<int>(lat.extent[0]) + 4,
                     2 * static_cast<int>(lat.extent[1]) + 4,
                     2 * static_cast<int>(lat.extent[2]) + 4};

  // bulk: tetrahedra with all four sites inside their class boxes
  std::set<Tetra> bulk;
  std::set<std::array<IVec, 4>> bulk_sites;
  for (int cx = -4; cx <= hi[0]; cx += 2) {
    for (int cy = -4; cy <= hi[1]; cy += 2) {
      for (int cz = -4; cz <= hi[2]; cz += 2) {
        IVec c{cx, cy, cz};
        for (int a = 0; a < 3; ++a) {
          for (int d = 0; d < 3; ++d) {
            if (d == a) continue;
            int t = 3 - a - d;
            for (int s : {1, -1}) {
              IVec b1 = c;
              b1[a] += 1;
              b1[d] -= 1;
              b1[t] += s;
              IVec b2 = b1;
              b2[d] += 2;
              IVec c2 = c;
              c2[a] += 2;
              std::array<IVec, 4> sites{c, c2, b1, b2};
              if (std::all_of(sites.begin(), sites.end(),
                              [&](const IVec &v) { return lat.real(v); })) {
                std::sort(sites.begin(), sites.end());
                bulk_sites.insert(sites);
              }
            }
          }
        }
      }
    }
  }
  for (const auto &sites : bulk_sites) {
    bulk.insert(make_tetra({real_node(sites[0]), real_node(sites[1]), real_node(sites[2]),
                            real_node(sites[3])}));
  }

  // surface triangles: in exactly one bulk tetrahedron; facet from the
  // missing completion site
  std::map<Triangle, std::vector<const std::array<IVec, 4> *>> tri_tetra;
  for (const auto &sites : bulk_sites) {
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<IVec> tv;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) tv.push_back(sites[i]);
      }
      tri_tetra[make_triangle(tv)].push_back(&sites);
    }
  }
  std::map<Triangle, Facet> surface;
  for (const auto &[tri, owners] : tri_tetra) {
    if (owners.size() > 2) {
      throw ConstructionError("triangle in more than two bulk tetrahedra");
    }
    if (owners.size() != 1) continue;
    IVec in_vertex{};
    for (const auto &v : *owners[0]) {
      if (std::find(tri.begin(), tri.end(), v) == tri.end()) in_vertex = v;
    }
    auto out = other_completion(tri, in_vertex);
    if (!out) throw ConstructionError("surface triangle lacks a unique completion");
    if (lat.real(*out)) throw ConstructionError("surface completion unexpectedly real");
    surface[tri] = lat.facet_of(*out);
  }

  std::set<Tetra> qubits = bulk;
  for (const auto &[tri, facet] : surface) {
    qubits.insert(make_tetra({real_node(tri[0]), real_node(tri[1]), real_node(tri[2]),
                              mega_node(facet)}));
  }

  // wedge qubits on facet-transition surface edges
  using SurfEdge = std::array<IVec, 2>;
  std::map<SurfEdge, std::vector<const Triangle *>> edge_tris;
  for (const auto &[tri, facet] : surface) {
    (void)facet;
    for (int skip = 0; skip < 3; ++skip) {
      std::vector<IVec> ev;
      for (int i = 0; i < 3; ++i) {
        if (i != skip) ev.push_back(tri[i]);
      }
      std::sort(ev.begin(), ev.end());
      edge_tris[SurfEdge{ev[0], ev[1]}].push_back(&tri);
    }
  }
  for (const auto &[edge, tris] : edge_tris) {
    if (tris.size() != 2) {
      throw ConstructionError("boundary surface edge not shared by two surface triangles");
    }
    Facet f1 = surface.at(*tris[0]);
    Facet f2 = surface.at(*tris[1]);
    if (f1 != f2) {
      qubits.insert(make_tetra(
          {real_node(edge[0]), real_node(edge[1]), mega_node(f1), mega_node(f2)}));
    }
  }

  // corner qubits: walk the surface-triangle cycle around each surface vertex
  std::map<IVec, std::vector<const Triangle *>> vert_tris;
  for (const auto &[tri, facet] : surface) {
    (void)facet;
    for (const auto &v : tri) vert_tris[v].push_back(&tri);
  }
  for (const auto &[v, tris] : vert_tris) {
    std::map<const Triangle *, std::vector<const Triangle *>> adj;
    for (const Triangle *t1 : tris) {
      for (const Triangle *t2 : tris) {
        if (t1 == t2) continue;
        int shared = 0;
        for (const auto &a : *t1) {
          if (std::find(t2->begin(), t2->end(), a) != t2->end()) ++shared;
        }
        if (shared == 2) adj[t1].push_back(t2);
      }
    }
    for (const Triangle *t : tris) {
      if (adj[t].size() != 2) {
        throw ConstructionError("boundary surface pinched at a vertex (extent too small)");
      }
    }
    std::vector<const Triangle *> cyc{tris[0]};
    const Triangle *prev = nullptr;
    while (true) {
      const Triangle *cur = cyc.back();
      const Triangle *nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      if (nxt == cyc[0]) break;
      cyc.push_back(nxt);
    }
    if (cyc.size() != tris.size()) {
      throw ConstructionError("boundary surface link disconnected (extent too small)");
    }
    std::vector<Facet> runs;
    for (const Triangle *t : cyc) {
      Facet f = surface.at(*t);
      if (runs.empty() || runs.back() != f) runs.push_back(f);
    }
    if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
    std::set<Facet> distinct(runs.begin(), runs.end());
    if (runs.size() != distinct.size()) {
      throw ConstructionError("facet region repeats around a surface vertex (extent too small)");
    }
    if (runs.size() == 3) {
      qubits.insert(make_tetra(
          {real_node(v), mega_node(runs[0]), mega_node(runs[1]), mega_node(runs[2])}));
    } else if (runs.size() > 3) {
      throw ConstructionError("more than three facets meet at a surface vertex");
    }
  }
  return qubits;
}

std::array<Rational, 3> tetra_centroid(const Tetra &t) {
  int64_t sum[3] = {0, 0, 0};
  int64_t count = 0;
  for (const auto &nd : t) {
    if (nd.mega) continue;
    ++count;
    for (int i = 0; i < 3; ++i) sum[i] += nd.p[i];
  }
  // doubled coordinates: true centroid is sum / (2 * count)
  return {Rational(sum[0], 2 * count), Rational(sum[1], 2 * count),
          Rational(sum[2], 2 * count)};
}

ColoredComplex index_complex(const std::set<Tetra> &qubits) {
  // deterministic ids: sort by centroid, then real-site count, then node keys
  std::vector<Tetra> qlist(qubits.begin(), qubits.end());
  auto sort_key = [](const Tetra &t) {
    auto c = tetra_centroid(t);
    int nreal = 0;
    for (const auto &nd : t) nreal += !nd.mega;
    return std::tuple(c[0], c[1], c[2], nreal, t[0].key(), t[1].key(), t[2].key(),
                      t[3].key());
  };
  std::sort(qlist.begin(), qlist.end(),
            [&](const Tetra &a, const Tetra &b) { return sort_key(a) < sort_key(b); });

  ColoredComplex cx;
  for (uint32_t i = 0; i < qlist.size(); ++i) {
    cx.qubits.push_back({i, tetra_centroid(qlist[i])});
  }

  std::map<Node, std::vector<uint32_t>> cell_support;
  std::map<std::array<Node, 2>, std::vector<uint32_t>> face_support;
  std::map<std::array<Node, 3>, std::vector<uint32_t>> edge_support;
  std::map<Facet, std::vector<uint32_t>> facet_support;
  for (uint32_t i = 0; i < qlist.size(); ++i) {
    const Tetra &t = qlist[i];
    for (const auto &nd : t) {
      if (nd.mega) {
        facet_support[nd.facet].push_back(i);
      } else {
        cell_support[nd].push_back(i);
      }
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (t[a].mega && t[b].mega) continue;
        face_support[{t[a], t[b]}].push_back(i);
      }
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        for (int c = b + 1; c < 4; ++c) {
          if (t[a].mega && t[b].mega && t[c].mega) continue;
          edge_support[{t[a], t[b], t[c]}].push_back(i);
        }
      }
    }
  }

  for (const auto &[nd, supp] : cell_support) {
    cx.cells.push_back({supp, node_color(nd)});
  }
  for (const auto &[pair, supp] : face_support) {
    cx.faces.push_back({supp, ColorPair(node_color(pair[0]), node_color(pair[1]))});
  }
  for (const auto &[tri, supp] : edge_support) {
    if (supp.size() != 2) {
      throw ConstructionError("lattice edge with " + std::to_string(supp.size()) +
                              " incident qubits");
    }
    std::set<Color> present{node_color(tri[0]), node_color(tri[1]), node_color(tri[2])};
    Color missing = Color::R;
    for (Color c : kColors) {
      if (!present.count(c)) missing = c;
    }
    cx.edges.push_back({{supp[0], supp[1]}, missing});
  }
  for (int f = 0; f < 6; ++f) {
    auto it = facet_support.find(static_cast<Facet>(f));
    if (it == facet_support.end()) continue;
    cx.boundaries.push_back(
        {kFacetNames[f], color_name(kFacetColors[f]), it->second});
  }

  auto by_support = [](const auto &a, const auto &b) { return a.support < b.support; };
  std::sort(cx.edges.begin(), cx.edges.end(), by_support);
  std::sort(cx.faces.begin(), cx.faces.end(), by_support);
  std::sort(cx.cells.begin(), cx.cells.end(), by_support);
  return cx;
}

void check_extent(const Extent &extent) {
  for (uint32_t e : extent) {
    if (e < 1) throw PreconditionError("extent components must be positive");
  }
}

}  // namespace

ColoredComplex build_cube(const Extent &extent) {
  check_extent(extent);
  Lattice lat{extent};
  ColoredComplex cx = index_complex(enumerate_qubit_tetra(lat));
  ValidationReport rep = validate(cx);
  if (!rep.all_pass()) {
    std::ostringstream os;
    os << "generated complex failed validation:\n" << rep.to_text();
    throw ConstructionError(os.str());
  }
  return cx;
}

ColoredComplex build_truncated_cube(const Extent &extent) {
  ColoredComplex cx = build_cube(extent);

  // strip along the rear vertical seam where the x+ and y+ facets meet:
  // qubits whose position is within one lattice unit of both max planes
  Rational xcut(2 * static_cast<int>(extent[0]) - 1, 2);
  Rational ycut(2 * static_cast<int>(extent[1]) - 2, 2);
  for (const auto &q : cx.qubits) {
    if (xcut <= q.pos[0] && ycut <= q.pos[1]) cx.truncation_region.push_back(q.id);
  }
  if (cx.truncation_region.empty()) {
    throw PreconditionError("truncation region is empty");
  }

  // the strip must stay clear of the opposite (x- and y-) boundaries
  for (const auto &b : cx.boundaries) {
    if (b.facet != "x-" && b.facet != "y-") continue;
    for (uint32_t q : cx.truncation_region) {
      if (std::binary_search(b.support.begin(), b.support.end(), q)) {
        throw PreconditionError("extent too small: truncation strip touches facet " + b.facet);
      }
    }
  }

  cx.boundaries.push_back({"truncated-edge", kPauliZLabel, cx.truncation_region});
  return cx;
}

}  // namespace cscc
