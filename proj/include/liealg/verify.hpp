#ifndef LIEALG_VERIFY_HPP
#define LIEALG_VERIFY_HPP

#include <string>
#include <vector>

#include "liealg/io.hpp"
#include "liealg/oracle.hpp"

namespace liealg {

struct CheckLine {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckLine> checks;
  int exit_code = 0;  // 0 all passed, 1 violation, 2 non-split spectrum or malformed input
  std::optional<SolveResult> result;

  void add(std::string name, bool passed, std::string detail = {}) {
    if (!passed && exit_code == 0) exit_code = 1;
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  void abort(std::string name, std::string detail) {
    exit_code = 2;
    checks.push_back({std::move(name), false, std::move(detail)});
  }
};

inline std::string describe(const AlgebraViolation& v) {
  return std::string(to_string(v.identity)) + " at (i,j,l,k,h) = (" + std::to_string(v.i) + "," + std::to_string(v.j) +
         "," + std::to_string(v.l) + "," + std::to_string(v.k) + "," + std::to_string(v.h) + ")";
}

inline std::string describe(const ModuleViolation& v) {
  return std::string(to_string(v.axiom)) + " at (k,h,i,j) = (" + std::to_string(v.k) + "," + std::to_string(v.h) + "," +
         std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

inline std::string describe(const DerivedIdentityReport::Failure& f) {
  return std::string(f.left ? "g" : "f") + "_h(<x,y>_k) = " + (f.left ? "g" : "f") + "_k(<x,y>_h) at (k,h,i,j) = (" +
         std::to_string(f.k) + "," + std::to_string(f.h) + "," + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
}

/// Runs every check on one instance and stops at the first failure that
/// makes the later checks meaningless.
inline VerifyReport run_verify(const Instance& inst) {
  VerifyReport rep;
  const LieLikeAlgebra& L = inst.algebra;
  const auto av = check_algebra(L);
  rep.add("algebra", av.empty(), av.empty() ? "" : describe(av.front()));
  if (!av.empty()) return rep;
  if (!inst.module) {
    rep.abort("module", "instance has no module");
    return rep;
  }
  const OrdinaryModule& M = *inst.module;

  const auto mv = check_module(M);
  rep.add("module", mv.empty(), mv.empty() ? "" : describe(mv.front()));
  if (!mv.empty()) return rep;
  const auto derived = check_derived_identities(M);
  rep.add("derived-identities", derived.passed(), derived.passed() ? "" : describe(derived.failures.front()));
  rep.add("annihilator-submodule", is_submodule(M, plus_annihilator(M)));

  const Solvability sol = is_solvable(L);
  rep.add("solvable", sol.solvable, "depth " + std::to_string(sol.depth));
  if (!sol.solvable) return rep;
  if (M.vdim() == 0) {
    rep.add("solve", false, "zero module has no weight vector");
    return rep;
  }

  try {
    SolveResult r = solve(L, M);
    rep.add("solve", true);
    rep.add("verify-weight", verify_weight(M, r.v, r.weight));
    rep.add("dichotomy", r.dichotomy != Dichotomy::Violation, to_string(r.dichotomy));
    const auto entries = oracle_solve(L, M);
    const bool match = oracle_match(entries, r.v, r.weight).has_value();
    rep.add("oracle", match, std::to_string(entries.size()) + " joint weight spaces");
    rep.result = std::move(r);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonSplitSpectrum) rep.abort("solve", e.what());
    else rep.add("solve", false, e.what());
  }
  return rep;
}

inline json report_to_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json line;
    line["check"] = c.name;
    line["passed"] = c.passed;
    if (!c.detail.empty()) line["detail"] = c.detail;
    checks.push_back(std::move(line));
  }
  json out;
  out["checks"] = std::move(checks);
  if (rep.result) out["result"] = result_to_json(*rep.result);
  out["exit_code"] = rep.exit_code;
  return out;
}

}  // namespace liealg

#endif
