/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "cscc/css.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "cscc/errors.hpp"

namespace cscc {

namespace {

nlohmann::json rows_to_json(const BitMatrix &m) {
  nlohmann::json out = nlohmann::json::array();
  for (size_t i = 0; i < m.num_rows(); ++i) out.push_back(m.row(i).set_bits());
  return out;
}

BitMatrix rows_from_json(const nlohmann::json &j, size_t n) {
  BitMatrix m(n);
  for (const auto &row : j) {
    std::vector<uint32_t> bits;
    for (const auto &x : row) bits.push_back(x.get<uint32_t>());
    m.add_row(Bitvec::from_bits(n, bits));
  }
  return m;
}

}  // namespace

nlohmann::json CssCode::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["hx"] = rows_to_json(hx);
  j["hz"] = rows_to_json(hz);
  j["qubit_map"] = qubit_map;
  return j;
}

CssCode CssCode::from_json(const nlohmann::json &j) {
  CssCode code;
  try {
    code.n = j.at("n").get<size_t>();
    code.hx = rows_from_json(j.at("hx"), code.n);
    code.hz = rows_from_json(j.at("hz"), code.n);
    if (j.contains("qubit_map")) {
      for (const auto &x : j.at("qubit_map")) code.qubit_map.push_back(x.get<uint32_t>());
    } else {
      for (uint32_t i = 0; i < code.n; ++i) code.qubit_map.push_back(i);
    }
  } catch (const nlohmann::json::exception &ex) {
    throw ParseError(std::string("malformed code JSON: ") + ex.what());
  }
  if (code.qubit_map.size() != code.n) throw ParseError("qubit_map length mismatch");
  for (size_t i = 0; i < code.hx.num_rows(); ++i) {
    for (size_t jr = 0; jr < code.hz.num_rows(); ++jr) {
      if (code.hx.row(i).parity_and(code.hz.row(jr))) {
        throw ParseError("code JSON stabilizers do not commute");
      }
    }
  }
  return code;
}

CssCode assemble(const ColoredComplex &cx) {
  CssCode code;
  code.n = cx.qubits.size();
  code.hx = BitMatrix(code.n);
  code.hz = BitMatrix(code.n);
  for (const auto &cell : cx.cells) code.hx.add_row(Bitvec::from_bits(code.n, cell.support));
  for (const auto &face : cx.faces) code.hz.add_row(Bitvec::from_bits(code.n, face.support));
  for (uint32_t i = 0; i < code.n; ++i) code.qubit_map.push_back(i);
  for (size_t i = 0; i < code.hx.num_rows(); ++i) {
    for (size_t j = 0; j < code.hz.num_rows(); ++j) {
      if (code.hx.row(i).parity_and(code.hz.row(j))) {
        throw ConstructionError("cell " + std::to_string(i) + " and face " + std::to_string(j) +
                                " anticommute; complex is invalid");
      }
    }
  }
  return code;
}

CssCode project_z(const CssCode &code, const std::vector<uint32_t> &region) {
  if (region.empty()) throw PreconditionError("projection region is empty");

  // region entries are complex qubit ids; translate to columns
  std::map<uint32_t, size_t> col_of;
  for (size_t c = 0; c < code.qubit_map.size(); ++c) col_of[code.qubit_map[c]] = c;
  Bitvec region_mask(code.n);
  for (uint32_t q : region) {
    auto it = col_of.find(q);
    if (it == col_of.end()) {
      throw PreconditionError("region qubit " + std::to_string(q) + " not a code column");
    }
    region_mask.set(it->second);
  }
  std::vector<size_t> keep;
  for (size_t c = 0; c < code.n; ++c) {
    if (!region_mask.get(c)) keep.push_back(c);
  }
  if (keep.empty()) throw PreconditionError("projection removes every column");

  auto restrict_vec = [&](const Bitvec &v) {
    Bitvec out(keep.size());
    for (size_t c = 0; c < keep.size(); ++c) {
      if (v.get(keep[c])) out.set(c);
    }
    return out;
  };

  CssCode out;
  out.n = keep.size();
  for (size_t c : keep) out.qubit_map.push_back(code.qubit_map[c]);

  // X side: basis of row combinations supported away from the region.
  // Solve lambda^T Hx = 0 on the region columns.
  const size_t m = code.hx.num_rows();
  BitMatrix constraint(m);
  for (uint32_t q : region) {
    size_t col = col_of[q];
    Bitvec row(m);
    for (size_t i = 0; i < m; ++i) {
      if (code.hx.row(i).get(col)) row.set(i);
    }
    constraint.add_row(std::move(row));
  }
  out.hx = BitMatrix(out.n);
  {
    BitMatrix combos(out.n);
    for (const Bitvec &lambda : constraint.kernel_basis()) {
      Bitvec v(code.n);
      for (uint32_t i : lambda.set_bits()) v ^= code.hx.row(i);
      if (!v.is_zero()) combos.add_row(restrict_vec(v));
    }
    combos.rref();
    for (size_t i = 0; i < combos.num_rows(); ++i) {
      if (!combos.row(i).is_zero()) out.hx.add_row(combos.row(i));
    }
  }

  // Z side: restriction, dropping zero rows and duplicates.
  out.hz = BitMatrix(out.n);
  std::set<std::vector<uint32_t>> seen;
  for (size_t i = 0; i < code.hz.num_rows(); ++i) {
    Bitvec v = restrict_vec(code.hz.row(i));
    if (v.is_zero()) continue;
    auto bits = v.set_bits();
    if (seen.insert(bits).second) out.hz.add_row(std::move(v));
  }
  return out;
}

namespace {

/// Independent representatives of kernel(stab_dual) modulo rowspace(mod).
std::vector<Bitvec> quotient_candidates(const BitMatrix &kernel_of, const BitMatrix &mod) {
  BitMatrix mod_rref = mod;
  std::vector<size_t> mod_piv = mod_rref.rref();
  BitMatrix acc(kernel_of.cols());
  std::vector<size_t> acc_piv;
  std::vector<Bitvec> out;
  for (const Bitvec &v : kernel_of.kernel_basis()) {
    Bitvec v2 = mod_rref.reduce(mod_piv, v);
    Bitvec v3 = acc.reduce(acc_piv, v2);
    if (v3.is_zero()) continue;
    // keep acc in sorted-pivot form
    size_t low = v3.lowest_set();
    size_t pos = 0;
    while (pos < acc_piv.size() && acc_piv[pos] < low) ++pos;
    std::vector<Bitvec> rows(acc.rows());
    rows.insert(rows.begin() + pos, v3);
    acc_piv.insert(acc_piv.begin() + pos, low);
    BitMatrix acc2(kernel_of.cols());
    for (auto &r : rows) acc2.add_row(std::move(r));
    acc = std::move(acc2);
    out.push_back(v2);
  }
  return out;
}

}  // namespace

LogicalBasis logical_basis(const CssCode &code) {
  if (code.k() < 1) throw PreconditionError("code has no logical qubits");
  std::vector<Bitvec> xc = quotient_candidates(code.hz, code.hx);
  std::vector<Bitvec> zc = quotient_candidates(code.hx, code.hz);
  const size_t k = xc.size();
  if (zc.size() != k || k != code.k()) {
    throw Error("logical candidate extraction inconsistent with k");
  }
  // symplectic Gram-Schmidt
  for (size_t i = 0; i < k; ++i) {
    size_t j = i;
    while (j < k && xc[i].parity_and(zc[j]) == 0) ++j;
    if (j == k) throw Error("symplectic pairing failed");
    std::swap(zc[i], zc[j]);
    for (size_t l = i + 1; l < k; ++l) {
      if (xc[l].parity_and(zc[i])) xc[l] ^= xc[i];
      if (xc[i].parity_and(zc[l])) zc[l] ^= zc[i];
    }
  }
  LogicalBasis basis;
  for (size_t i = 0; i < k; ++i) {
    basis.pairs.push_back({xc[i], zc[i], std::string(1, static_cast<char>('A' + i)), ""});
  }
  return basis;
}

std::optional<Bitvec> geometric_string(const ColoredComplex &cx, const CssCode &code,
                                       Color color, const std::string &facet_a,
                                       const std::string &facet_b) {
  const size_t ncx = cx.qubits.size();
  std::map<uint32_t, size_t> col_of;
  for (size_t c = 0; c < code.qubit_map.size(); ++c) col_of[code.qubit_map[c]] = c;

  // node ids in the color-class graph: cells of this color, then facets
  // labeled with it
  std::vector<size_t> color_cells;
  for (size_t ci = 0; ci < cx.cells.size(); ++ci) {
    if (cx.cells[ci].color == color) color_cells.push_back(ci);
  }
  std::vector<size_t> color_facets;
  int src = -1, dst = -1;
  for (size_t bi = 0; bi < cx.boundaries.size(); ++bi) {
    if (cx.boundaries[bi].label != color_name(color)) continue;
    if (cx.boundaries[bi].facet == facet_a) src = static_cast<int>(color_cells.size() + color_facets.size());
    if (cx.boundaries[bi].facet == facet_b) dst = static_cast<int>(color_cells.size() + color_facets.size());
    color_facets.push_back(bi);
  }
  if (src < 0 || dst < 0 || src == dst) return std::nullopt;

  // per-qubit node lookup
  std::vector<int> node_of(ncx, -1);
  for (size_t i = 0; i < color_cells.size(); ++i) {
    for (uint32_t q : cx.cells[color_cells[i]].support) node_of[q] = static_cast<int>(i);
  }
  for (size_t i = 0; i < color_facets.size(); ++i) {
    for (uint32_t q : cx.boundaries[color_facets[i]].support) {
      node_of[q] = static_cast<int>(color_cells.size() + i);
    }
  }

  const size_t num_nodes = color_cells.size() + color_facets.size();
  std::vector<std::vector<std::pair<int, size_t>>> arcs(num_nodes);  // (other node, edge idx)
  for (size_t ei = 0; ei < cx.edges.size(); ++ei) {
    const auto &e = cx.edges[ei];
    if (e.color != color) continue;
    if (!col_of.count(e.support[0]) || !col_of.count(e.support[1])) continue;  // projected away
    int a = node_of[e.support[0]];
    int b = node_of[e.support[1]];
    if (a < 0 || b < 0 || a == b) continue;
    arcs[a].push_back({b, ei});
    arcs[b].push_back({a, ei});
  }
  for (auto &v : arcs) std::sort(v.begin(), v.end());

  std::vector<std::pair<int, size_t>> prev(num_nodes, {-2, 0});  // (parent node, edge idx)
  prev[src] = {-1, 0};
  std::deque<int> dq{src};
  while (!dq.empty()) {
    int x = dq.front();
    dq.pop_front();
    if (x == dst) break;
    for (const auto &[y, ei] : arcs[x]) {
      if (prev[y].first == -2) {
        prev[y] = {x, ei};
        dq.push_back(y);
      }
    }
  }
  if (prev[dst].first == -2) return std::nullopt;

  Bitvec supp(code.n);
  for (int cur = dst; prev[cur].first != -1; cur = prev[cur].first) {
    const auto &e = cx.edges[prev[cur].second];
    supp.set(col_of[e.support[0]], !supp.get(col_of[e.support[0]]));
    supp.set(col_of[e.support[1]], !supp.get(col_of[e.support[1]]));
  }
  if (supp.is_zero()) return std::nullopt;
  return supp;
}

namespace {

/// Invert a k x k GF(2) matrix given as row bitmasks; nullopt when singular.
std::optional<std::vector<uint64_t>> invert_small(std::vector<uint64_t> m, size_t k) {
  std::vector<uint64_t> inv(k);
  for (size_t i = 0; i < k; ++i) inv[i] = uint64_t(1) << i;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = k;
    for (size_t i = col; i < k; ++i) {
      if ((m[i] >> col) & 1) {
        piv = i;
        break;
      }
    }
    if (piv == k) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    for (size_t i = 0; i < k; ++i) {
      if (i != col && ((m[i] >> col) & 1)) {
        m[i] ^= m[col];
        inv[i] ^= inv[col];
      }
    }
  }
  return inv;
}

/// Dominant edge color of a Z support after greedily adding Hz rows to
/// minimize (#distinct edge colors, weight). Empty string when the support
/// contains no complete edge.
std::string dominant_edge_color(const ColoredComplex &cx, const CssCode &code, Bitvec z) {
  std::map<uint32_t, size_t> col_of;
  for (size_t c = 0; c < code.qubit_map.size(); ++c) col_of[code.qubit_map[c]] = c;
  struct EdgeCols {
    size_t a, b;
    Color color;
  };
  std::vector<EdgeCols> edges;
  for (const auto &e : cx.edges) {
    auto ia = col_of.find(e.support[0]);
    auto ib = col_of.find(e.support[1]);
    if (ia != col_of.end() && ib != col_of.end()) {
      edges.push_back({ia->second, ib->second, e.color});
    }
  }
  auto metric = [&](const Bitvec &v) {
    std::array<size_t, 4> count{0, 0, 0, 0};
    for (const auto &e : edges) {
      if (v.get(e.a) && v.get(e.b)) ++count[static_cast<int>(e.color)];
    }
    size_t distinct = 0;
    for (size_t c : count) distinct += (c > 0);
    return std::tuple(distinct, v.weight(), count);
  };
  auto cur = metric(z);
  bool improved = true;
  while (improved) {
    improved = false;
    for (size_t i = 0; i < code.hz.num_rows(); ++i) {
      Bitvec cand = z ^ code.hz.row(i);
      auto mc = metric(cand);
      if (std::tuple(std::get<0>(mc), std::get<1>(mc)) <
          std::tuple(std::get<0>(cur), std::get<1>(cur))) {
        z = std::move(cand);
        cur = mc;
        improved = true;
      }
    }
  }
  const auto &count = std::get<2>(cur);
  size_t best = 0;
  for (size_t c = 1; c < 4; ++c) {
    if (count[c] > count[best]) best = c;
  }
  if (count[best] == 0) return "";
  return color_name(static_cast<Color>(best));
}

}  // namespace

LogicalBasis match_geometric_basis(const ColoredComplex &cx, const CssCode &code,
                                   const LogicalBasis &basis) {
  const size_t k = basis.pairs.size();
  auto fallback = [&]() {
    LogicalBasis out = basis;
    out.annotation = "geometric-match: none";
    for (auto &p : out.pairs) p.dominant_color = dominant_edge_color(cx, code, p.zbar);
    return out;
  };
  if (k < 2 || k > 64) return fallback();

  auto blue = geometric_string(cx, code, Color::B, "x-", "x+");
  auto red = geometric_string(cx, code, Color::R, "y-", "y+");
  if (!blue || !red) return fallback();

  // both strings must be logical: commute with Hx, outside rowspace(Hz)
  TrackedRowSpace hz_space(code.hz);
  for (const Bitvec *s : {&*blue, &*red}) {
    for (size_t i = 0; i < code.hx.num_rows(); ++i) {
      if (code.hx.row(i).parity_and(*s)) return fallback();
    }
    if (hz_space.contains(*s)) return fallback();
  }

  // prescribed Z list: the two strings, then remaining old classes
  std::vector<Bitvec> zs{*blue, *red};
  {
    BitMatrix hz_plus = code.hz;
    hz_plus.add_row(*blue);
    hz_plus.add_row(*red);
    size_t base_rank = hz_plus.rank();
    if (base_rank != code.rank_hz() + 2) return fallback();  // strings dependent
    for (const auto &p : basis.pairs) {
      if (zs.size() == k) break;
      hz_plus.add_row(p.zbar);
      size_t r = hz_plus.rank();
      if (r > base_rank) {
        zs.push_back(p.zbar);
        base_rank = r;
      }
    }
    if (zs.size() != k) return fallback();
  }

  // solve Xbar_i = sum_m inv(G)_im xbar_m so that <Xbar_i, Z_j> = delta_ij
  std::vector<uint64_t> gram(k, 0);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (basis.pairs[i].xbar.parity_and(zs[j])) gram[i] |= uint64_t(1) << j;
    }
  }
  auto inv = invert_small(gram, k);
  if (!inv) return fallback();
  std::vector<Bitvec> xs;
  for (size_t i = 0; i < k; ++i) {
    Bitvec x(code.n);
    for (size_t jm = 0; jm < k; ++jm) {
      if (((*inv)[i] >> jm) & 1) x ^= basis.pairs[jm].xbar;
    }
    xs.push_back(std::move(x));
  }

  LogicalBasis out;
  out.annotation = "geometric-match: A=blue(x- to x+), B=red(y- to y+)";
  for (size_t i = 0; i < k; ++i) {
    LogicalPair p;
    p.xbar = xs[i];
    p.zbar = zs[i];
    p.label = std::string(1, static_cast<char>('A' + i));
    p.dominant_color = dominant_edge_color(cx, code, p.zbar);
    out.pairs.push_back(std::move(p));
  }
  return out;
}

nlohmann::json LogicalBasis::to_json() const {
  nlohmann::json j;
  j["pairs"] = nlohmann::json::array();
  for (const auto &p : pairs) {
    nlohmann::json e;
    e["label"] = p.label;
    e["xbar"] = p.xbar.set_bits();
    e["zbar"] = p.zbar.set_bits();
    if (!p.dominant_color.empty()) e["dominant_color"] = p.dominant_color;
    j["pairs"].push_back(e);
  }
  if (!annotation.empty()) j["annotation"] = annotation;
  return j;
}

}  // namespace cscc
