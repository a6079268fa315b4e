#pragma once

// JSON wire formats. nlohmann::json keeps object keys sorted, so every
// serializer here is deterministic byte for byte once the numeric content is
// fixed; round-tripping export -> import -> export is the identity on bytes.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "liefp/chevalley.hpp"
#include "liefp/fp.hpp"
#include "liefp/graded.hpp"
#include "liefp/orbits.hpp"
#include "liefp/root_system.hpp"

namespace liefp {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// matrices and subspaces

inline json matrix_to_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline FpMatrix matrix_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  if (cols == 0) throw std::invalid_argument("matrix rows must be nonempty");
  FpMatrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = j[r][c];
      if (!cell.is_number_integer()) throw std::invalid_argument("matrix entries must be integers");
      m.at(r, c) = fp_from_int(cell.get<long long>(), p);
    }
  }
  return m;
}

// "dim" records the ambient dimension; the rank is basis.size().
inline json subspace_to_json(const Subspace& s) {
  json out;
  out["p"] = s.p;
  out["dim"] = s.ambient;
  json basis = json::array();
  for (const auto& row : s.basis) {
    json r = json::array();
    for (auto v : row) r.push_back(v);
    basis.push_back(std::move(r));
  }
  out["basis"] = std::move(basis);
  return out;
}

inline Subspace subspace_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("dim") || !j.contains("basis"))
    throw std::invalid_argument("subspace needs fields p, dim, basis");
  std::uint32_t p = j.at("p").get<std::uint32_t>();
  require_odd_prime(p);
  std::size_t ambient = j.at("dim").get<std::size_t>();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& jr : j.at("basis")) {
    if (!jr.is_array() || jr.size() != ambient)
      throw std::invalid_argument("subspace basis rows must have length dim");
    std::vector<std::uint32_t> row;
    for (const auto& cell : jr) row.push_back(fp_from_int(cell.get<long long>(), p));
    rows.push_back(std::move(row));
  }
  return span(rows, ambient, p);
}

// ---------------------------------------------------------------------------
// representations

inline json rep_to_json(const LieRep& rep) {
  json out;
  out["p"] = rep.p;
  out["d"] = rep.d;
  out["label"] = rep.label;
  json ops = json::array();
  for (const auto& m : rep.operators) ops.push_back(matrix_to_json(m));
  out["operators"] = std::move(ops);
  return out;
}

inline LieRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("d") || !j.contains("operators"))
    throw std::invalid_argument("representation needs fields p, d, operators");
  LieRep rep;
  rep.p = j.at("p").get<std::uint32_t>();
  require_odd_prime(rep.p);
  rep.d = j.at("d").get<std::size_t>();
  if (j.contains("label")) rep.label = j.at("label").get<std::string>();
  for (const auto& jm : j.at("operators")) {
    FpMatrix m = matrix_from_json(jm, rep.p);
    if (m.rows != rep.d || m.cols != rep.d)
      throw std::invalid_argument("operator matrices must be d x d");
    rep.operators.push_back(std::move(m));
  }
  validate_rep(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// search results

inline json orbit_report_to_json(const OrbitReport& rep) {
  json out;
  out["u"] = rep.u;
  out["bound"] = rep.exact ? "exact" : "upper";
  out["mode"] = rep.mode;
  out["vectors_examined"] = rep.vectors_examined;
  if (rep.seed) {
    out["seed"] = *rep.seed;
    out["prng"] = rep.prng;
  }
  json ws = json::array();
  for (const auto& w : rep.witnesses) {
    json jw;
    jw["dim"] = w.dim;
    json v = json::array();
    for (auto x : w.v) v.push_back(x);
    jw["vector"] = std::move(v);
    ws.push_back(std::move(jw));
  }
  out["witnesses"] = std::move(ws);
  return out;
}

inline json family_to_json(const SubspaceFamily& fam) {
  json out;
  out["min_dim"] = fam.min_dim;
  json entries = json::array();
  for (const auto& [sub, count] : fam.entries) {
    json e;
    e["subspace"] = subspace_to_json(sub);
    e["orbit_count"] = count;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  out["distinct_subspaces"] = fam.entries.size();
  return out;
}

// ---------------------------------------------------------------------------
// root data and structure constants

inline json cartan_to_json(const std::vector<std::vector<int>>& cartan) {
  json rows = json::array();
  for (const auto& r : cartan) {
    json row = json::array();
    for (int v : r) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<int>> cartan_from_json(const json& j) {
  const json* cell = &j;
  if (j.is_object()) {
    if (!j.contains("cartan")) throw std::invalid_argument("expected a \"cartan\" field");
    cell = &j.at("cartan");
  }
  if (!cell->is_array() || cell->empty())
    throw std::invalid_argument("cartan matrix must be a nonempty array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& jr : *cell) {
    if (!jr.is_array() || jr.size() != cell->size())
      throw std::invalid_argument("cartan matrix must be square");
    std::vector<int> row;
    for (const auto& v : jr) {
      if (!v.is_number_integer()) throw std::invalid_argument("cartan entries must be integers");
      row.push_back(v.get<int>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Basis labels plus the full bracket table on basis pairs i < j; cells with
// zero bracket are omitted.
inline json chevalley_to_json(const ChevalleyAlgebra& alg) {
  json out;
  json basis = json::array();
  for (std::size_t i = 0; i < alg.dim; ++i) basis.push_back(alg.basis_label(i));
  out["basis"] = std::move(basis);
  out["dim"] = alg.dim;
  out["rank"] = alg.rs.rank;
  out["family"] = std::string(1, alg.rs.family);
  json brackets = json::array();
  for (std::size_t i = 0; i < alg.dim; ++i)
    for (std::size_t k = i + 1; k < alg.dim; ++k) {
      const auto& cell = alg.bracket_table[i * alg.dim + k];
      if (cell.empty()) continue;
      json terms = json::array();
      for (const auto& [idx, c] : cell) terms.push_back(json::array({idx, c}));
      brackets.push_back(json::array({i, k, std::move(terms)}));
    }
  out["brackets"] = std::move(brackets);
  return out;
}

// ---------------------------------------------------------------------------
// ideals as arrays of polynomial strings

inline HomIdeal ideal_from_json(const json& j, std::uint32_t p, std::uint32_t nvars) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("generators")) throw std::invalid_argument("expected a \"generators\" field");
    arr = &j.at("generators");
  }
  if (!arr->is_array()) throw std::invalid_argument("ideal must be an array of polynomial strings");
  std::vector<GradedPoly> gens;
  for (const auto& v : *arr) {
    if (!v.is_string()) throw std::invalid_argument("ideal generators must be strings");
    gens.push_back(parse_poly(v.get<std::string>(), nvars, p));
  }
  return HomIdeal(p, nvars, std::move(gens));
}

inline json ideal_to_json(const HomIdeal& j) {
  json arr = json::array();
  for (const auto& g : j.gens) arr.push_back(to_string(g));
  return arr;
}

}  // namespace liefp
