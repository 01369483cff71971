#ifndef LIEALG_IO_HPP
#define LIEALG_IO_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "liealg/oracle.hpp"
#include "liealg/solver.hpp"

namespace liealg {

using json = nlohmann::ordered_json;

/// Algebra, optional module and whatever metadata the file carried.
struct Instance {
  LieLikeAlgebra algebra;
  std::optional<OrdinaryModule> module;
  json metadata;  // null when absent
};

namespace detail {

[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

inline std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) parse_error(std::string("field '") + key + "' must be a non-negative integer");
  return j[key].get<std::size_t>();
}

/// j[i] when present and not null.
inline const json* entry(const json& j, std::size_t i) {
  if (j.is_null()) return nullptr;
  if (!j.is_array()) parse_error("expected an array");
  if (i >= j.size() || j[i].is_null()) return nullptr;
  return &j[i];
}

}  // namespace detail

inline json scalar_to_json(const Scalar& a) { return to_string(a); }

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  detail::parse_error("scalars are strings \"p/q\" or \"p\"");
}

inline json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(scalar_to_json(a));
  return out;
}

inline Vector vector_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) detail::parse_error("vector of length " + std::to_string(n) + " expected");
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) detail::parse_error(std::to_string(rows) + " matrix rows expected");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector r = vector_from_json(j[i], cols);
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

inline json algebra_to_json(const LieLikeAlgebra& L) {
  json c = json::array();
  for (std::size_t k = 0; k < L.s(); ++k) {
    json ck = json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < L.dim(); ++j) row.push_back(vector_to_json(L.structure(k, i, j)));
      ck.push_back(std::move(row));
    }
    c.push_back(std::move(ck));
  }
  json out;
  out["dim"] = L.dim();
  out["s"] = L.s();
  out["c"] = std::move(c);
  return out;
}

/// Missing or null entries of "c" are zero vectors.
inline LieLikeAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) detail::parse_error("algebra must be an object");
  const std::size_t n = detail::count_field(j, "dim"), s = detail::count_field(j, "s");
  if (s == 0) detail::parse_error("s must be at least 1");
  LieLikeAlgebra L(n, s);
  const json c = j.value("c", json());
  if (!c.is_null() && (!c.is_array() || c.size() > s)) detail::parse_error("'c' must hold at most s index layers");
  for (std::size_t k = 0; k < s; ++k) {
    const json* ck = detail::entry(c, k);
    if (!ck) continue;
    if (ck->size() > n) detail::parse_error("too many rows in 'c'");
    for (std::size_t i = 0; i < n; ++i) {
      const json* ci = detail::entry(*ck, i);
      if (!ci) continue;
      if (ci->size() > n) detail::parse_error("too many columns in 'c'");
      for (std::size_t jj = 0; jj < n; ++jj)
        if (const json* v = detail::entry(*ci, jj)) L.set_structure(k, i, jj, vector_from_json(*v, n));
    }
  }
  return L;
}

inline json module_to_json(const OrdinaryModule& M) {
  json F = json::array(), G = json::array();
  for (std::size_t k = 0; k < M.s(); ++k) {
    json fk = json::array(), gk = json::array();
    for (std::size_t i = 0; i < M.n(); ++i) {
      fk.push_back(matrix_to_json(M.F(k, i)));
      gk.push_back(matrix_to_json(M.G(k, i)));
    }
    F.push_back(std::move(fk));
    G.push_back(std::move(gk));
  }
  json out;
  out["vdim"] = M.vdim();
  out["F"] = std::move(F);
  out["G"] = std::move(G);
  return out;
}

/// Missing or null operators are zero matrices.
inline OrdinaryModule module_from_json(const json& j, const LieLikeAlgebra& L) {
  if (!j.is_object()) detail::parse_error("module must be an object");
  const std::size_t m = detail::count_field(j, "vdim");
  OrdinaryModule M(L, m);
  for (const char* key : {"F", "G"}) {
    const json ops = j.value(key, json());
    if (!ops.is_null() && (!ops.is_array() || ops.size() > L.s())) detail::parse_error(std::string("'") + key + "' must hold at most s index layers");
    for (std::size_t k = 0; k < L.s(); ++k) {
      const json* ok = detail::entry(ops, k);
      if (!ok) continue;
      if (ok->size() > L.dim()) detail::parse_error(std::string("too many operators in '") + key + "'");
      for (std::size_t i = 0; i < L.dim(); ++i)
        if (const json* op = detail::entry(*ok, i)) {
          Matrix X = matrix_from_json(*op, m, m);
          if (key[0] == 'F') M.set_F(k, i, std::move(X));
          else M.set_G(k, i, std::move(X));
        }
    }
  }
  return M;
}

inline json instance_to_json(const Instance& inst) {
  json out;
  out["algebra"] = algebra_to_json(inst.algebra);
  if (inst.module) out["module"] = module_to_json(*inst.module);
  if (!inst.metadata.is_null()) out["metadata"] = inst.metadata;
  return out;
}

/// Accepts {"algebra": ..., "module": ..., "metadata": ...} or a bare algebra object.
inline Instance instance_from_json(const json& j) {
  if (!j.is_object()) detail::parse_error("instance must be an object");
  if (!j.contains("algebra")) return {algebra_from_json(j), std::nullopt, json()};
  Instance inst{algebra_from_json(j["algebra"]), std::nullopt, j.value("metadata", json())};
  if (j.contains("module")) inst.module = module_from_json(j["module"], inst.algebra);
  return inst;
}

inline json weight_grid(const Weight& w, bool psi) {
  json out = json::array();
  for (std::size_t k = 0; k < w.s(); ++k) {
    json row = json::array();
    for (std::size_t i = 0; i < w.n(); ++i) row.push_back(scalar_to_json(psi ? w.psi(k, i) : w.phi(k, i)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json weight_to_json(const Weight& w) {
  json out;
  out["phi"] = weight_grid(w, false);
  out["psi"] = weight_grid(w, true);
  return out;
}

inline Weight weight_from_json(const json& j, std::size_t s, std::size_t n) {
  Weight w(s, n);
  const Matrix phi = matrix_from_json(j.at("phi"), s, n), psi = matrix_from_json(j.at("psi"), s, n);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      w.phi(k, i) = phi(k, i);
      w.psi(k, i) = psi(k, i);
    }
  return w;
}

inline json result_to_json(const SolveResult& r) {
  json out;
  out["v"] = vector_to_json(r.v);
  out["phi"] = weight_grid(r.weight, false);
  out["psi"] = weight_grid(r.weight, true);
  out["dichotomy"] = to_string(r.dichotomy);
  json trace = json::array();
  for (auto b : r.branch_trace) trace.push_back(to_string(b));
  out["branch_trace"] = std::move(trace);
  return out;
}

inline std::optional<Dichotomy> dichotomy_from_string(const std::string& s) {
  for (auto d : {Dichotomy::PsiZero, Dichotomy::PhiEqualsPsi, Dichotomy::Both, Dichotomy::Violation})
    if (s == to_string(d)) return d;
  return std::nullopt;
}

inline std::optional<Branch> branch_from_string(const std::string& s) {
  for (auto b : {Branch::AnnNonzeroGZero, Branch::AnnNonzeroGNonzero, Branch::Case1, Branch::Case2})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

/// Inverse of result_to_json; the per-level records are not serialized.
inline SolveResult result_from_json(const json& j, std::size_t s, std::size_t n) {
  SolveResult r;
  const json& v = j.at("v");
  r.v = vector_from_json(v, v.size());
  r.weight = weight_from_json(j, s, n);
  auto d = dichotomy_from_string(j.at("dichotomy").get<std::string>());
  if (!d) detail::parse_error("unknown dichotomy tag");
  r.dichotomy = *d;
  for (const auto& t : j.at("branch_trace")) {
    auto b = branch_from_string(t.get<std::string>());
    if (!b) detail::parse_error("unknown branch tag");
    r.branch_trace.push_back(*b);
  }
  return r;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    detail::parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(parse_json_text(buf.str()));
  } catch (const json::exception& e) {
    detail::parse_error(std::string("bad instance: ") + e.what());
  }
}

/// Stable text form used for files and byte-level comparisons.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace liealg

#endif
