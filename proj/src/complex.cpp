/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "cscc/bitvec.hpp"
#include "cscc/errors.hpp"

namespace cscc {

namespace {

nlohmann::json support_json(const std::vector<uint32_t> &ids) {
  return nlohmann::json(ids);
}

std::vector<uint32_t> parse_support(const nlohmann::json &j) {
  if (!j.is_array()) throw ParseError("support must be an array");
  std::vector<uint32_t> out;
  for (const auto &x : j) out.push_back(x.get<uint32_t>());
  return out;
}

}  // namespace

nlohmann::json ColoredComplex::to_json() const {
  nlohmann::json j;
  j["qubits"] = nlohmann::json::array();
  for (const auto &q : qubits) {
    j["qubits"].push_back({{"id", q.id},
                           {"pos", {q.pos[0].str(), q.pos[1].str(), q.pos[2].str()}}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto &e : edges) {
    j["edges"].push_back({{"support", {e.support[0], e.support[1]}},
                          {"color", color_name(e.color)}});
  }
  j["faces"] = nlohmann::json::array();
  for (const auto &f : faces) {
    j["faces"].push_back({{"support", support_json(f.support)}, {"color", f.colors.str()}});
  }
  j["cells"] = nlohmann::json::array();
  for (const auto &c : cells) {
    j["cells"].push_back({{"support", support_json(c.support)}, {"color", color_name(c.color)}});
  }
  j["boundaries"] = nlohmann::json::array();
  for (const auto &b : boundaries) {
    j["boundaries"].push_back(
        {{"facet", b.facet}, {"label", b.label}, {"support", support_json(b.support)}});
  }
  j["truncation_region"] = support_json(truncation_region);
  return j;
}

ColoredComplex ColoredComplex::from_json(const nlohmann::json &j) {
  ColoredComplex cx;
  try {
    for (const auto &q : j.at("qubits")) {
      QubitRecord rec;
      rec.id = q.at("id").get<uint32_t>();
      const auto &pos = q.at("pos");
      for (int i = 0; i < 3; ++i) rec.pos[i] = Rational::parse(pos.at(i).get<std::string>());
      cx.qubits.push_back(rec);
    }
    for (const auto &e : j.at("edges")) {
      auto s = parse_support(e.at("support"));
      if (s.size() != 2) throw ParseError("edge support must have 2 qubits");
      cx.edges.push_back({{s[0], s[1]}, parse_color(e.at("color").get<std::string>())});
    }
    for (const auto &f : j.at("faces")) {
      cx.faces.push_back({parse_support(f.at("support")),
                          ColorPair::parse(f.at("color").get<std::string>())});
    }
    for (const auto &c : j.at("cells")) {
      cx.cells.push_back({parse_support(c.at("support")),
                          parse_color(c.at("color").get<std::string>())});
    }
    for (const auto &b : j.at("boundaries")) {
      cx.boundaries.push_back({b.at("facet").get<std::string>(),
                               b.at("label").get<std::string>(),
                               parse_support(b.at("support"))});
    }
    cx.truncation_region = parse_support(j.at("truncation_region"));
  } catch (const nlohmann::json::exception &ex) {
    throw ParseError(std::string("malformed complex JSON: ") + ex.what());
  }
  return cx;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto &c : checks) {
    nlohmann::json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  j["all_pass"] = all_pass();
  return j;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto &c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass) os << "  (" << c.witness << ")";
    os << "\n";
  }
  os << (all_pass() ? "all checks passed" : "validation FAILED") << "\n";
  return os.str();
}

ValidationReport validate(const ColoredComplex &cx) {
  ValidationReport rep;
  const size_t n = cx.qubits.size();
  auto add = [&rep](const std::string &name, bool pass, const std::string &witness = "") {
    rep.checks.push_back({name, pass, pass ? "" : witness});
  };

  // well-formedness: dense ids, sorted in-range supports
  {
    bool ok = true;
    std::string w;
    for (size_t i = 0; i < n && ok; ++i) {
      if (cx.qubits[i].id != i) {
        ok = false;
        w = "qubit ids not dense at index " + std::to_string(i);
      }
    }
    auto check_supports = [&](const std::vector<uint32_t> &s, const std::string &what) {
      if (!std::is_sorted(s.begin(), s.end())) {
        ok = false;
        w = what + " support not sorted";
      }
      for (uint32_t q : s) {
        if (q >= n) {
          ok = false;
          w = what + " refers to unknown qubit " + std::to_string(q);
        }
      }
    };
    for (size_t i = 0; i < cx.edges.size() && ok; ++i) {
      const auto &e = cx.edges[i];
      check_supports({e.support[0], e.support[1]}, "edge " + std::to_string(i));
      if (ok && e.support[0] == e.support[1]) {
        ok = false;
        w = "edge " + std::to_string(i) + " is degenerate";
      }
    }
    for (size_t i = 0; i < cx.faces.size() && ok; ++i)
      check_supports(cx.faces[i].support, "face " + std::to_string(i));
    for (size_t i = 0; i < cx.cells.size() && ok; ++i)
      check_supports(cx.cells[i].support, "cell " + std::to_string(i));
    for (const auto &b : cx.boundaries) {
      if (!ok) break;
      check_supports(b.support, "facet " + b.facet);
    }
    if (ok) check_supports(cx.truncation_region, "truncation_region");
    add("well-formed", ok, w);
    if (!ok) return rep;  // later checks assume indexable data
  }

  std::vector<Bitvec> cell_mask, face_mask, edge_mask;
  for (const auto &c : cx.cells) cell_mask.push_back(Bitvec::from_bits(n, c.support));
  for (const auto &f : cx.faces) face_mask.push_back(Bitvec::from_bits(n, f.support));
  for (const auto &e : cx.edges)
    edge_mask.push_back(Bitvec::from_bits(n, {e.support[0], e.support[1]}));

  // interior qubits: exactly 4 cells / 4 edges / 6 faces, all colors distinct.
  // A qubit is interior when it lies in 4 cells of 4 distinct colors.
  {
    std::vector<std::vector<size_t>> qcells(n), qedges(n), qfaces(n);
    for (size_t i = 0; i < cx.cells.size(); ++i)
      for (uint32_t q : cx.cells[i].support) qcells[q].push_back(i);
    for (size_t i = 0; i < cx.edges.size(); ++i)
      for (uint32_t q : cx.edges[i].support) qedges[q].push_back(i);
    for (size_t i = 0; i < cx.faces.size(); ++i)
      for (uint32_t q : cx.faces[i].support) qfaces[q].push_back(i);
    bool ok = true;
    std::string w;
    for (size_t q = 0; q < n && ok; ++q) {
      std::set<Color> ccols;
      for (size_t ci : qcells[q]) ccols.insert(cx.cells[ci].color);
      bool interior = qcells[q].size() == 4 && ccols.size() == 4;
      if (!interior) continue;
      std::set<Color> ecols;
      for (size_t ei : qedges[q]) ecols.insert(cx.edges[ei].color);
      if (qedges[q].size() != 4 || ecols.size() != 4) {
        ok = false;
        w = "interior qubit " + std::to_string(q) + " has bad edge set";
      }
      std::set<ColorPair> fpairs;
      for (size_t fi : qfaces[q]) fpairs.insert(cx.faces[fi].colors);
      if (ok && (qfaces[q].size() != 6 || fpairs.size() != 6)) {
        ok = false;
        w = "interior qubit " + std::to_string(q) + " has bad face set";
      }
    }
    add("interior-qubit-incidence", ok, w);
  }

  // per-qubit boundary lookup: facet indices touching each qubit
  std::vector<std::vector<size_t>> qfacets(n);
  for (size_t bi = 0; bi < cx.boundaries.size(); ++bi)
    for (uint32_t q : cx.boundaries[bi].support) qfacets[q].push_back(bi);

  // edge-cell color consistency: each endpoint qubit of a u-colored edge lies
  // in a u-cell, or on a boundary facet whose label permits u. Interior edges
  // must see two distinct u-cells.
  {
    bool ok = true;
    std::string w;
    for (size_t ei = 0; ei < cx.edges.size() && ok; ++ei) {
      const auto &e = cx.edges[ei];
      Color u = e.color;
      std::vector<size_t> ucells[2];
      bool terminated[2] = {false, false};
      for (int s = 0; s < 2; ++s) {
        uint32_t q = e.support[s];
        for (size_t ci = 0; ci < cx.cells.size(); ++ci) {
          if (cx.cells[ci].color == u &&
              std::binary_search(cx.cells[ci].support.begin(), cx.cells[ci].support.end(), q))
            ucells[s].push_back(ci);
        }
        for (size_t bi : qfacets[q]) {
          const auto &lbl = cx.boundaries[bi].label;
          if (lbl == kPauliZLabel || lbl == color_name(u)) terminated[s] = true;
        }
      }
      for (int s = 0; s < 2 && ok; ++s) {
        if (ucells[s].empty() && !terminated[s]) {
          ok = false;
          w = "edge " + std::to_string(ei) + " side " + std::to_string(s) +
              " has no " + color_name(u) + "-cell and no permitting facet";
        }
      }
      if (ok && !ucells[0].empty() && !ucells[1].empty() && ucells[0] == ucells[1]) {
        ok = false;
        w = "edge " + std::to_string(ei) + " joins a " + color_name(u) + "-cell to itself";
      }
    }
    add("edge-cell-color-consistency", ok, w);
  }

  // face-cell containment: a {u,v} face lies in exactly one u-cell and one
  // v-cell, unless it terminates on a matching boundary facet.
  {
    bool ok = true;
    std::string w;
    for (size_t fi = 0; fi < cx.faces.size() && ok; ++fi) {
      const auto &f = cx.faces[fi];
      for (Color u : {f.colors.a, f.colors.b}) {
        int count = 0;
        for (size_t ci = 0; ci < cx.cells.size(); ++ci) {
          if (cx.cells[ci].color != u) continue;
          if (cell_mask[ci].and_weight(face_mask[fi]) == f.support.size()) ++count;
        }
        bool on_facet = false;
        for (const auto &b : cx.boundaries) {
          if (b.label != color_name(u) && b.label != kPauliZLabel) continue;
          Bitvec bm = Bitvec::from_bits(n, b.support);
          if (bm.and_weight(face_mask[fi]) == f.support.size()) on_facet = true;
        }
        if (!(count == 1 || (count == 0 && on_facet))) {
          ok = false;
          w = "face " + std::to_string(fi) + " lies in " + std::to_string(count) + " " +
              color_name(u) + "-cells";
        }
      }
    }
    add("face-cell-containment", ok, w);
  }

  // face decomposition: for each w outside the face's color pair, the
  // w-colored edges inside the face partition its support.
  {
    bool ok = true;
    std::string w;
    for (size_t fi = 0; fi < cx.faces.size() && ok; ++fi) {
      const auto &f = cx.faces[fi];
      for (Color wc : kColors) {
        if (f.colors.contains(wc)) continue;
        Bitvec cover(n);
        bool disjoint = true;
        for (size_t ei = 0; ei < cx.edges.size(); ++ei) {
          if (cx.edges[ei].color != wc) continue;
          if (edge_mask[ei].and_weight(face_mask[fi]) != 2) continue;
          if (cover.intersects(edge_mask[ei])) disjoint = false;
          cover ^= edge_mask[ei];
        }
        if (!disjoint || !(cover == face_mask[fi])) {
          ok = false;
          w = "face " + std::to_string(fi) + " does not split into disjoint " +
              color_name(wc) + "-edges";
          break;
        }
      }
    }
    add("face-edge-decomposition", ok, w);
  }

  // (cell, face) even overlap — the CSS commutation rule.
  {
    bool ok = true;
    std::string w;
    for (size_t ci = 0; ci < cx.cells.size() && ok; ++ci) {
      for (size_t fi = 0; fi < cx.faces.size(); ++fi) {
        if (cell_mask[ci].and_weight(face_mask[fi]) % 2 != 0) {
          ok = false;
          w = "cell " + std::to_string(ci) + " overlaps face " + std::to_string(fi) +
              " oddly";
          break;
        }
      }
    }
    add("cell-face-even-overlap", ok, w);
  }

  // boundary soundness: no u-cell touches a facet labeled u.
  {
    bool ok = true;
    std::string w;
    for (const auto &b : cx.boundaries) {
      if (b.label == kPauliZLabel) continue;
      Color u = parse_color(b.label);
      Bitvec bm = Bitvec::from_bits(n, b.support);
      for (size_t ci = 0; ci < cx.cells.size(); ++ci) {
        if (cx.cells[ci].color == u && cell_mask[ci].intersects(bm)) {
          ok = false;
          w = "cell " + std::to_string(ci) + " (" + color_name(u) + ") touches facet " +
              b.facet;
          break;
        }
      }
      if (!ok) break;
    }
    add("boundary-soundness", ok, w);
  }

  // truncation region within bounds
  {
    bool ok = true;
    std::string w;
    for (uint32_t q : cx.truncation_region) {
      if (q >= n) {
        ok = false;
        w = "truncation region refers to qubit " + std::to_string(q);
        break;
      }
    }
    add("truncation-region-bounds", ok, w);
  }

  return rep;
}

nlohmann::json Bipartition::to_json() const {
  size_t even = 0;
  for (uint8_t p : parity) even += (p == 0);
  nlohmann::json j;
  j["even_count"] = even;
  j["odd_count"] = parity.size() - even;
  j["parity"] = parity;
  return j;
}

Bipartition bipartition(const ColoredComplex &cx) {
  const size_t n = cx.qubits.size();
  std::vector<std::vector<uint32_t>> adj(n);
  for (const auto &e : cx.edges) {
    adj[e.support[0]].push_back(e.support[1]);
    adj[e.support[1]].push_back(e.support[0]);
  }
  Bipartition bp;
  bp.parity.assign(n, 2);  // 2 = unassigned
  for (uint32_t start = 0; start < n; ++start) {
    if (bp.parity[start] != 2) continue;
    bp.parity[start] = 0;  // lowest id in component is even
    std::deque<uint32_t> dq{start};
    while (!dq.empty()) {
      uint32_t x = dq.front();
      dq.pop_front();
      for (uint32_t y : adj[x]) {
        if (bp.parity[y] == 2) {
          bp.parity[y] = 1 - bp.parity[x];
          dq.push_back(y);
        } else if (bp.parity[y] == bp.parity[x]) {
          throw NotBipartiteError("qubits " + std::to_string(x) + " and " + std::to_string(y) +
                                  " share an edge but got equal parity");
        }
      }
    }
  }
  return bp;
}

}  // namespace cscc
