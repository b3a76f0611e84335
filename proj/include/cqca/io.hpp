#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "equivalence.hpp"
#include "isa.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "qca.hpp"
#include "symplectic.hpp"

namespace cqca {

using json = nlohmann::ordered_json;

inline json to_json(const laurent_poly& p) { return to_ascii(p); }

// {"modulus", "variables", "rows", "cols", "entries": [[ascii polynomial, ...], ...]}
inline json to_json(const poly_matrix& m) {
  json vars = json::array();
  for (auto& v : variable_names(m.zero().dim())) vars.push_back(v);
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_ascii(m(i, j)));
    rows.push_back(std::move(r));
  }
  return {{"modulus", m.zero().modulus()}, {"variables", vars}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline poly_matrix matrix_from_json(const json& j) {
  const auto d = j.at("modulus").get<std::uint32_t>();
  const int D = static_cast<int>(j.at("variables").size());
  const auto r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
  const auto& e = j.at("entries");
  if (e.size() != r) throw shape_mismatch("entry rows differ from the declared row count");
  poly_matrix m = zeros(r, c, d, D);
  for (std::size_t i = 0; i < r; ++i) {
    if (e[i].size() != c) throw shape_mismatch("entry columns differ from the declared column count");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = parse_poly(e[i][k].get<std::string>(), d, D);
  }
  return m;
}

inline json to_json(const symplectic_map& t) {
  return {{"q", t.q()}, {"symplectic", is_symplectic(t)}, {"matrix", to_json(t.matrix())}};
}

inline std::string family_name(qca_family f) {
  switch (f) {
    case qca_family::three_fermion: return "3f";
    case qca_family::zp_alpha: return "zp";
    case qca_family::zp_beta: return "zp-beta";
  }
  return "?";
}

inline json to_json(const qca_spec& s) {
  return {{"family", family_name(s.family)}, {"l", s.l}, {"dim", s.dim()}, {"p", s.d}, {"k", s.k}};
}

inline json to_json(const entry_mismatch& m) {
  return {{"what", m.what}, {"row", m.row}, {"col", m.col}, {"expected", m.expected}, {"got", m.got}};
}

inline json to_json(const order_certificate& c) {
  auto report = check_certificate(c);
  json stages = json::array();
  for (auto& s : c.stages)
    stages.push_back({{"name", s.name},
                      {"kind", s.kind == stage_kind::sign ? "sign" : "elementary"},
                      {"matrix", to_json(s.map.matrix())}});
  json j = {{"target", to_json(c.target)}, {"two_copy", c.two_copy}, {"a", c.a}};
  if (c.two_copy) j["b"] = c.b;
  j["conjugator"] = to_json(c.conjugator.matrix());
  j["stages"] = stages;
  json shift = json::array();
  for (std::size_t i = 0; i < c.shift.matrix().rows(); ++i) shift.push_back(to_ascii(c.shift(i, i)));
  j["shift"] = shift;
  j["claimed_order"] = c.claimed_order;
  j["verified"] = report.ok;
  if (report.failure) j["failure"] = to_json(*report.failure);
  return j;
}

inline json to_json(const isa_pair& r) {
  json j = {{"kind", r.kind == isa_kind::z2 ? "z2" : "zp"}, {"l", r.l}, {"dim", r.D}, {"p", r.d}};
  if (r.kind == isa_kind::zp) j["k"] = r.k;
  j["q"] = r.q();
  j["commuting"] = pairing_matrix(r.A, r.Abar).is_zero();
  j["witness_inverts"] = is_identity(r.H * r.Hinv) && is_identity(r.Hinv * r.H);
  j["A"] = to_json(r.A);
  j["Abar"] = to_json(r.Abar);
  j["Hinv"] = to_json(r.Hinv);
  return j;
}

// Human-readable rows "[a, b, c]" with macron inverses.
inline std::string to_text(const poly_matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]\n";
  }
  return s;
}

inline std::string shift_text(const symplectic_map& t) {
  std::string s = "diag(";
  for (std::size_t i = 0; i < t.matrix().rows(); ++i) {
    if (i) s += ", ";
    s += to_string(t(i, i));
  }
  return s + ")";
}

// Header line {"d", "L", "q", "rows", "cols", "nonzeros"} then "row col value" lines.
inline void write_coordinate_list(std::ostream& out, const explicit_map& m) {
  json h = {{"d", m.modulus()},
            {"L", m.shape().lengths},
            {"q", m.row_block() / 2},
            {"rows", m.rows()},
            {"cols", m.cols()},
            {"nonzeros", m.nonzeros()},
            {"wrapped", m.wrapped()}};
  out << h.dump() << "\n";
  for (auto& [i, j, v] : m.triplets()) out << i << " " << j << " " << v << "\n";
}

inline std::string coordinate_list(const explicit_map& m) {
  std::ostringstream s;
  write_coordinate_list(s, m);
  return s.str();
}

}  // namespace cqca
