#ifndef LIEALG_SOLVER_HPP
#define LIEALG_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liealg/weight.hpp"

namespace liealg {

/// Which case of the inductive step produced the weight vector at one level.
enum class Branch {
  AnnNonzeroGZero,     // U ∩ V^{ann,+} != 0 and every g_k(x) kills v0
  AnnNonzeroGNonzero,  // U ∩ V^{ann,+} != 0 and some g_h(x) v0 != 0
  Case1,               // U ∩ V^{ann,+} = 0 and f_h(x) != g_h(x) somewhere on U
  Case2,               // U ∩ V^{ann,+} = 0 and f_h(x) = g_h(x) on U for all h
};

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::AnnNonzeroGZero: return "ann-nonzero/g-zero";
    case Branch::AnnNonzeroGNonzero: return "ann-nonzero/g-nonzero";
    case Branch::Case1: return "case-1";
    case Branch::Case2: return "case-2";
  }
  return "unknown";
}

/// Data of one inductive step: the level's module, the split L = A (+) Qx and
/// the weight vector found for A. Kept so that the lemma checks can be run on
/// exactly the setups the solver went through.
struct LevelRecord {
  OrdinaryModule module;
  Subspace ideal;
  Vector x;
  Vector sub_vector;
  Weight sub_weight;  // over the canonical basis of `ideal`
  Branch branch;
  /// g-nonzero step whose vector g_h0(x) v0 was not a weight vector of weight
  /// zero; a common eigenvector of all f_k(x), g_k(x) on the same space was
  /// used instead.
  bool repaired = false;
};

struct SolveResult {
  Vector v;
  Weight weight;
  Dichotomy dichotomy = Dichotomy::Both;
  /// One tag per level, from the one-dimensional subalgebra up to L itself.
  std::vector<Branch> branch_trace;
  std::vector<LevelRecord> levels;
};

namespace detail {

[[noreturn]] inline void theorem_violation(const std::string& what) {
  throw Error(ErrorKind::TheoremViolation, what);
}

/// Runs joint_eigenvector, reporting broken invariance or a missing common
/// eigenvector as a theorem violation.
inline JointEigen guaranteed_joint_eigenvector(const std::vector<Matrix>& family, const Subspace& within,
                                               const char* what) {
  try {
    return joint_eigenvector(family, within);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonSplitSpectrum) throw;
    theorem_violation(std::string(what) + ": " + e.what());
  }
}

/// Weight on L = A (+) Qx from its restriction to A's canonical basis and its
/// values at x.
inline Weight extend_weight(const Weight& sub, const Subspace& A, const Vector& x, const std::vector<Scalar>& phi_x,
                            const std::vector<Scalar>& psi_x) {
  const std::size_t n = x.size(), s = sub.s();
  std::vector<Vector> rows = A.basis_vectors();
  rows.push_back(x);
  const Matrix coords = inverse(Matrix::from_rows(n, rows));  // row i: e_i in the basis (A, x)
  Weight w(s, n);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Scalar p = coords(i, n - 1) * phi_x[k];
      Scalar q = coords(i, n - 1) * psi_x[k];
      for (std::size_t a = 0; a + 1 < n; ++a) {
        p += coords(i, a) * sub.phi(k, a);
        q += coords(i, a) * sub.psi(k, a);
      }
      w.phi(k, i) = p;
      w.psi(k, i) = q;
    }
  return w;
}

struct LevelOutcome {
  Vector v;
  Weight weight;
};

class LevelSolver {
 public:
  explicit LevelSolver(std::vector<LevelRecord>& levels) : levels_(levels) {}

  LevelOutcome solve(const OrdinaryModule& M) {
    const LieLikeAlgebra& L = M.algebra();
    const std::size_t n = L.dim(), s = M.s(), m = M.vdim();
    if (n == 0) return {unit_vector(m, 0), Weight(s, 0)};

    auto [A, x] = split_codim1(L);
    const LevelOutcome inner = solve(restrict_module(M, A));

    const Subspace U = weight_space(M, A, inner.weight);
    if (!U.contains(inner.v)) theorem_violation("weight space misses the subalgebra's weight vector");
    const Subspace ann = plus_annihilator(M);

    std::vector<Matrix> fx, gx;
    for (std::size_t k = 0; k < s; ++k) {
      fx.push_back(M.f(k, x));
      gx.push_back(M.g(k, x));
    }

    Step step;
    const Subspace Y = subspace_intersect(U, ann);
    if (!Y.is_zero()) {
      step = annihilator_branch(fx, gx, Y, inner.weight);
    } else if (auto witness = case1_witness(fx, gx, U)) {
      // w~ = (f_h0(x) - g_h0(x)) w is a weight vector for A with psi' = 0
      // lying in the plus annihilator.
      const Vector w_tilde = (fx[witness->h] - gx[witness->h]) * witness->w;
      const Weight zeroed = inner.weight.with_zero_psi();
      const Subspace Y_tilde = subspace_intersect(weight_space(M, A, zeroed), ann);
      if (!Y_tilde.contains(w_tilde)) theorem_violation("case 1: w~ is not a weight vector inside the annihilator");
      step = annihilator_branch(fx, gx, Y_tilde, zeroed);
      step.branch = Branch::Case1;
    } else {
      step = case2(fx, gx, U, inner.weight);
    }

    Weight w = step.zero_weight ? Weight(s, n) : extend_weight(step.sub_weight, A, x, step.phi_x, step.psi_x);
    if (step.zero_weight && !verify_weight(M, step.v, w)) {
      repair(step, fx, gx);
      w = extend_weight(step.sub_weight, A, x, step.phi_x, step.psi_x);
    }
    if (!verify_weight(M, step.v, w))
      theorem_violation(std::string("branch ") + to_string(step.branch) + " produced a vector that is not a weight vector");

    levels_.push_back({M, A, x, inner.v, inner.weight, step.branch, step.repaired});
    return {std::move(step.v), std::move(w)};
  }

 private:
  struct Step {
    Vector v;
    Weight sub_weight;
    std::vector<Scalar> phi_x, psi_x;
    bool zero_weight = false;
    Branch branch = Branch::Case2;
    Subspace Y;  // space the annihilator branch worked in
    bool repaired = false;
  };

  struct Witness {
    std::size_t h;
    Vector w;
  };

  /// U ∩ V^{ann,+} != 0: the f_k(x) commute on Y and leave it invariant.
  static Step annihilator_branch(const std::vector<Matrix>& fx, const std::vector<Matrix>& gx, const Subspace& Y,
                                 const Weight& sub_weight) {
    const std::size_t s = fx.size();
    const JointEigen je = guaranteed_joint_eigenvector(fx, Y, "f_k(x) on U ∩ V^{ann,+}");
    std::optional<std::size_t> h0;
    for (std::size_t h = 0; h < s && !h0; ++h)
      if (!is_zero(gx[h] * je.vector)) h0 = h;
    Step step;
    if (!h0) {
      step.v = je.vector;
      step.sub_weight = sub_weight;
      step.phi_x = je.eigenvalues;
      step.psi_x.assign(s, Scalar(0));
      step.branch = Branch::AnnNonzeroGZero;
      return step;
    }
    step.v = gx[*h0] * je.vector;
    step.sub_weight = sub_weight;
    step.Y = Y;
    step.zero_weight = true;
    step.branch = Branch::AnnNonzeroGNonzero;
    return step;
  }

  /// g_h0(x) v0 need not have weight zero (a trivially bundled Lie algebra
  /// acting on itself already breaks it). Y is invariant under every g_k(x)
  /// once psi' = 0, so take a common eigenvector of all f_k(x), g_k(x) on Y.
  static void repair(Step& step, const std::vector<Matrix>& fx, const std::vector<Matrix>& gx) {
    for (const auto& g : gx)
      if (!maps_into(g, step.Y, step.Y)) theorem_violation("g-nonzero: U ∩ V^{ann,+} is not invariant under g_k(x)");
    std::vector<Matrix> family = fx;
    family.insert(family.end(), gx.begin(), gx.end());
    const JointEigen je = guaranteed_joint_eigenvector(family, step.Y, "f_k(x), g_k(x) on U ∩ V^{ann,+}");
    const std::size_t s = fx.size();
    step.v = je.vector;
    step.phi_x.assign(je.eigenvalues.begin(), je.eigenvalues.begin() + s);
    step.psi_x.assign(je.eigenvalues.begin() + s, je.eigenvalues.end());
    step.zero_weight = false;
    step.repaired = true;
  }

  /// First canonical basis vector w of U with f_h(x) w != g_h(x) w, smallest h first.
  static std::optional<Witness> case1_witness(const std::vector<Matrix>& fx, const std::vector<Matrix>& gx,
                                              const Subspace& U) {
    for (std::size_t h = 0; h < fx.size(); ++h)
      for (std::size_t i = 0; i < U.dim(); ++i) {
        Vector u = U.basis_vector(i);
        if (fx[h] * u != gx[h] * u) return Witness{h, std::move(u)};
      }
    return std::nullopt;
  }

  /// f_h(x) = g_h(x) on U: common eigenvector of the f_k(x) on U, then of the
  /// g_k(x) on the joint eigenspace U^lambda.
  static Step case2(const std::vector<Matrix>& fx, const std::vector<Matrix>& gx, const Subspace& U,
                    const Weight& sub_weight) {
    for (const auto& g : gx)
      if (!maps_into(g, U, U)) theorem_violation("case 2: U is not invariant under g_k(x)");
    const JointEigen lam = guaranteed_joint_eigenvector(fx, U, "f_k(x) on U");
    std::vector<Matrix> eqs;
    for (std::size_t k = 0; k < fx.size(); ++k) eqs.push_back(shifted(fx[k], lam.eigenvalues[k]));
    const Subspace U_lambda = subspace_intersect(U, common_kernel(U.ambient_dim(), eqs));
    for (const auto& g : gx)
      if (!maps_into(g, U_lambda, U_lambda)) theorem_violation("case 2: U^lambda is not invariant under g_k(x)");
    const JointEigen mu = guaranteed_joint_eigenvector(gx, U_lambda, "g_k(x) on U^lambda");
    Step step;
    step.v = mu.vector;
    step.sub_weight = sub_weight;
    step.phi_x = lam.eigenvalues;
    step.psi_x = mu.eigenvalues;
    step.branch = Branch::Case2;
    return step;
  }

  std::vector<LevelRecord>& levels_;
};

}  // namespace detail

/// Common weight vector of an ordinary module over a solvable algebra,
/// built by induction on dim L along codimension-one ideals.
inline SolveResult solve(const LieLikeAlgebra& L, const OrdinaryModule& M) {
  if (!(M.algebra() == L)) throw Error(ErrorKind::AlgebraMismatch, "module is defined over a different algebra");
  if (M.vdim() == 0) throw Error(ErrorKind::InvalidInstance, "the module must be nonzero");
  if (!L.validated()) {
    auto v = check_algebra(L);
    if (!v.empty()) throw Error(ErrorKind::InvalidInstance, "algebra violates its defining identities");
  }
  if (!is_solvable(L).solvable) throw Error(ErrorKind::NotSolvable, "algebra is not solvable");
  if (!check_module(M).empty()) throw Error(ErrorKind::InvalidInstance, "module violates its defining identities");

  SolveResult result;
  detail::LevelSolver solver(result.levels);
  auto out = solver.solve(M);
  result.v = std::move(out.v);
  result.weight = std::move(out.weight);
  result.dichotomy = check_dichotomy(result.weight);
  for (const auto& lvl : result.levels) result.branch_trace.push_back(lvl.branch);
  return result;
}

}  // namespace liealg

#endif
