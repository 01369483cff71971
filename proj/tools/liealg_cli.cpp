#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liealg/liealg.hpp"

using namespace liealg;

namespace {

bool as_json = false;

void emit(const json& j, const std::string& text) {
  if (as_json) std::cout << dump(j);
  else std::cout << text;
}

std::string row_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

std::string weight_text(const Weight& w) {
  std::string out;
  for (std::size_t k = 0; k < w.s(); ++k) {
    Vector phi(w.n()), psi(w.n());
    for (std::size_t i = 0; i < w.n(); ++i) {
      phi[i] = w.phi(k, i);
      psi[i] = w.psi(k, i);
    }
    out += "  phi_" + std::to_string(k) + " = " + row_text(phi) + "   psi_" + std::to_string(k) + " = " + row_text(psi) + "\n";
  }
  return out;
}

json basis_json(const Subspace& U) {
  json out = json::array();
  for (const auto& b : U.basis_vectors()) out.push_back(vector_to_json(b));
  return out;
}

std::string basis_text(const Subspace& U) {
  std::string out;
  for (const auto& b : U.basis_vectors()) out += "  " + row_text(b) + "\n";
  return out;
}

const OrdinaryModule& need_module(const Instance& inst) {
  if (!inst.module) throw Error(ErrorKind::Parse, "instance has no module");
  return *inst.module;
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

int cmd_check_algebra(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const auto violations = check_algebra(inst.algebra);
  json j;
  j["valid"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) {
    json e;
    e["identity"] = to_string(v.identity);
    e["i"] = v.i, e["j"] = v.j, e["l"] = v.l, e["k"] = v.k, e["h"] = v.h;
    e["residual"] = vector_to_json(v.residual);
    list.push_back(std::move(e));
  }
  j["violations"] = std::move(list);
  if (auto t = is_trivial(inst.algebra)) {
    json f = json::array();
    for (const auto& a : t->factors) f.push_back(scalar_to_json(a));
    j["trivial"] = {{"base_index", t->base_index}, {"factors", f}};
  } else {
    j["trivial"] = nullptr;
  }
  std::string text = violations.empty() ? "algebra: valid\n" : "algebra: " + std::to_string(violations.size()) + " violations\n";
  for (std::size_t i = 0; i < violations.size() && i < 10; ++i) text += "  " + describe(violations[i]) + "\n";
  text += std::string("trivial bundle: ") + (is_trivial(inst.algebra) ? "yes" : "no") + "\n";
  emit(j, text);
  return violations.empty() ? 0 : 1;
}

int cmd_check_module(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const OrdinaryModule& M = need_module(inst);
  const auto violations = check_module(M);
  json j;
  j["valid"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) {
    json e;
    e["axiom"] = to_string(v.axiom);
    e["k"] = v.k, e["h"] = v.h, e["i"] = v.i, e["j"] = v.j;
    e["residual"] = matrix_to_json(v.residual);
    list.push_back(std::move(e));
  }
  j["violations"] = std::move(list);
  const auto derived = check_derived_identities(M);
  j["derived_identities"] = derived.passed();
  std::string text = violations.empty() ? "module: valid\n" : "module: " + std::to_string(violations.size()) + " violations\n";
  for (std::size_t i = 0; i < violations.size() && i < 10; ++i) text += "  " + describe(violations[i]) + "\n";
  text += std::string("derived identities: ") + (derived.passed() ? "hold" : "fail") + "\n";
  emit(j, text);
  return violations.empty() && derived.passed() ? 0 : 1;
}

int cmd_derived(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const auto series = derived_series(inst.algebra);
  const Solvability sol = is_solvable(inst.algebra);
  json j;
  json dims = json::array();
  std::string text = "derived series dimensions:";
  for (const auto& D : series) {
    dims.push_back(D.dim());
    text += " " + std::to_string(D.dim());
  }
  j["dimensions"] = std::move(dims);
  j["solvable"] = sol.solvable;
  j["depth"] = sol.depth;
  text += "\nsolvable: " + std::string(sol.solvable ? "yes" : "no") + " (depth " + std::to_string(sol.depth) + ")\n";
  emit(j, text);
  return 0;
}

int cmd_annihilator(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const OrdinaryModule& M = need_module(inst);
  const Subspace ann = plus_annihilator(M);
  const bool sub = is_submodule(M, ann);
  json j;
  j["dim"] = ann.dim();
  j["basis"] = basis_json(ann);
  j["submodule"] = sub;
  emit(j, "plus annihilator, dim " + std::to_string(ann.dim()) + ":\n" + basis_text(ann) +
              "submodule: " + (sub ? "yes" : "no") + "\n");
  return sub ? 0 : 1;
}

int cmd_adjoint(const std::string& file, const std::string& out) {
  Instance inst = read_instance_file(file);
  inst.module = adjoint(inst.algebra);
  write_file(out, dump(instance_to_json(inst)));
  return 0;
}

int cmd_solve(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const SolveResult r = solve(inst.algebra, need_module(inst));
  std::string text = "v = " + row_text(r.v) + "\n" + weight_text(r.weight) + "dichotomy: " + to_string(r.dichotomy) +
                     "\nbranch trace:";
  for (auto b : r.branch_trace) text += std::string(" ") + to_string(b);
  emit(result_to_json(r), text + "\n");
  return 0;
}

int cmd_oracle(const std::string& file) {
  const Instance inst = read_instance_file(file);
  const auto entries = oracle_solve(inst.algebra, need_module(inst));
  json j = json::array();
  std::string text = std::to_string(entries.size()) + " joint weight spaces\n";
  for (const auto& e : entries) {
    json w = weight_to_json(e.weight);
    w["basis"] = basis_json(e.space);
    j.push_back(std::move(w));
    text += "dim " + std::to_string(e.space.dim()) + ":\n" + basis_text(e.space) + weight_text(e.weight);
  }
  emit(j, text);
  return entries.empty() ? 1 : 0;
}

int cmd_verify(const std::string& file) {
  const VerifyReport rep = run_verify(read_instance_file(file));
  std::string text;
  for (const auto& c : rep.checks)
    text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
  if (rep.result) text += std::string("dichotomy: ") + to_string(rep.result->dichotomy) + "\n";
  emit(report_to_json(rep), text);
  return rep.exit_code;
}

int cmd_generate(const std::string& construction, const GeneratorSpec& base, const std::string& out) {
  GeneratorSpec spec = base;
  auto c = construction_from_string(construction);
  if (!c) throw Error(ErrorKind::Parse, "unknown construction " + construction);
  spec.construction = *c;
  write_file(out, dump(instance_to_json(generate(spec))));
  return 0;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::NonSplitSpectrum:
    case ErrorKind::DimensionMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-like algebras, ordinary modules and common weight vectors"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "print JSON instead of text");

  std::string file, out;
  GeneratorSpec spec;
  std::string construction;
  int code = 0;

  auto file_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "instance JSON file")->required();
    sub->add_flag("--json", as_json, "print JSON instead of text");
    sub->callback([&code, &file, fn] { code = fn(file); });
    return sub;
  };
  file_cmd("check-algebra", "check the defining identities of the algebra", cmd_check_algebra);
  file_cmd("check-module", "check the module axioms and derived identities", cmd_check_module);
  file_cmd("derived", "derived series and solvability", cmd_derived);
  file_cmd("annihilator", "plus annihilator and its submodule check", cmd_annihilator);
  file_cmd("solve", "common weight vector", cmd_solve);
  file_cmd("oracle", "all joint weight spaces by brute force", cmd_oracle);
  file_cmd("verify", "run every check on an instance", cmd_verify);

  auto* adj = app.add_subcommand("adjoint", "write the instance with the adjoint module");
  adj->add_option("FILE", file, "instance or algebra JSON file")->required();
  adj->add_option("-o,--output", out, "output file (stdout if omitted)");
  adj->callback([&] { code = cmd_adjoint(file, out); });

  auto* gen = app.add_subcommand("generate", "generate a random valid solvable instance");
  gen->add_option("--construction", construction,
                  "abelian | scaled-leibniz-bundle | graded-nilpotent | direct-sum | basis-changed")
      ->required();
  gen->add_option("--dim", spec.dim, "algebra dimension")->required();
  gen->add_option("--s", spec.s, "number of brackets")->default_val(1)->check(CLI::PositiveNumber);
  gen->add_option("--seed", spec.seed, "random seed")->default_val(0);
  gen->add_option("--bound", spec.coefficient_bound, "coefficient bound")->default_val(2)->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", out, "output file (stdout if omitted)");
  gen->callback([&] { code = cmd_generate(construction, spec, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return code;
}
