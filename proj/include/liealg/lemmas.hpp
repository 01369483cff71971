#ifndef LIEALG_LEMMAS_HPP
#define LIEALG_LEMMAS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "liealg/solver.hpp"

namespace liealg {

/// Outcome of one of the lemma checks. `failure` names the first broken
/// relation when `passed` is false.
struct LemmaReport {
  bool passed = true;
  std::string failure;

  void fail(std::string what) {
    if (passed) failure = std::move(what);
    passed = false;
  }
};

/// For a family G normalizing the span of ops_A, the joint eigenspace
/// U = {u : A_i u = phi_i u} is G-invariant.
inline bool normalizer_invariance_check(const std::vector<Matrix>& ops_A, const std::vector<Scalar>& phi,
                                        const std::vector<Matrix>& ops_G) {
  if (ops_A.size() != phi.size()) throw Error(ErrorKind::DimensionMismatch, "one eigenvalue per operator of A");
  std::size_t m = 0;
  if (!ops_A.empty()) m = ops_A.front().rows();
  else if (!ops_G.empty()) m = ops_G.front().rows();
  for (const auto& op : ops_A)
    if (op.rows() != m || op.cols() != m) throw Error(ErrorKind::DimensionMismatch, "operators of A must be square");
  for (const auto& op : ops_G)
    if (op.rows() != m || op.cols() != m) throw Error(ErrorKind::DimensionMismatch, "operators of G must be square");

  // [A_i, X] in span(ops_A), with matrices flattened to vectors of length m^2.
  auto flatten = [m](const Matrix& a) {
    Vector v(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) v[i * m + j] = a(i, j);
    return v;
  };
  std::vector<Vector> flat;
  for (const auto& a : ops_A) flat.push_back(flatten(a));
  const Subspace span_A = Subspace::span(m * m, flat);
  for (const auto& X : ops_G)
    for (const auto& a : ops_A)
      if (!span_A.contains(flatten(commutator(a, X))))
        throw Error(ErrorKind::NormalizerPreconditionFailed, "[A_i, X] is not in the span of the operators of A");

  std::vector<Matrix> eqs;
  for (std::size_t i = 0; i < ops_A.size(); ++i) eqs.push_back(shifted(ops_A[i], phi[i]));
  const Subspace U = eqs.empty() ? Subspace::full(m) : common_kernel(m, eqs);
  for (const auto& X : ops_G)
    if (!maps_into(X, U, U)) return false;
  return true;
}

namespace detail {

/// L = A (+) Qx with every bracket landing in A.
inline void check_codim1_setup(const LieLikeAlgebra& L, const Subspace& A, const Vector& x) {
  const std::size_t n = L.dim();
  if (A.ambient_dim() != n || x.size() != n) throw Error(ErrorKind::SetupInvalid, "shapes of A and x");
  if (A.dim() + 1 != n || A.contains(x)) throw Error(ErrorKind::SetupInvalid, "L is not A (+) Qx");
  if (!is_subspace_of(bracket_span(L, Subspace::full(n), Subspace::full(n)), A))
    throw Error(ErrorKind::SetupInvalid, "brackets of L do not land in A");
}

/// Value of a functional over A's canonical basis at a vector of A.
inline Scalar functional_on(const Subspace& A, const Weight& w, bool psi, std::size_t k, const Vector& a) {
  const Vector c = A.coordinates(a);
  Scalar acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * (psi ? w.psi(k, i) : w.phi(k, i));
  return acc;
}

}  // namespace detail

/// Builds u_m = g_h(x)^m u0 for m = 0..depth and checks the congruences modulo
/// V^{ann,+} + span{u_0, ..., u_{m-1}}:
///   f_k(a) u_m = phi'_k(a) u_m,  g_k(a) u_m = psi'_k(a) u_m  (a in A)
/// and f_k(x) u_m = u_{m+1} modulo V^{ann,+} + span{u_0, ..., u_m}.
inline LemmaReport congruence_check(const LieLikeAlgebra& L, const Subspace& A, const Vector& x,
                                    const OrdinaryModule& M, const Vector& u0, const Weight& w, std::size_t h,
                                    std::size_t depth) {
  detail::check_codim1_setup(L, A, x);
  if (!(M.algebra() == L)) throw Error(ErrorKind::SetupInvalid, "module is over a different algebra");
  if (h >= M.s() || depth == 0) throw Error(ErrorKind::SetupInvalid, "index h or depth out of range");
  if (w.s() != M.s() || w.n() != A.dim()) throw Error(ErrorKind::SetupInvalid, "weight shape over A");
  if (u0.size() != M.vdim() || !weight_space(M, A, w).contains(u0))
    throw Error(ErrorKind::SetupInvalid, "u0 is not a weight vector for A");

  const std::size_t s = M.s();
  const Subspace ann = plus_annihilator(M);
  const Matrix gh = M.g(h, x);
  std::vector<Matrix> fA, gA;
  std::vector<Scalar> phiA, psiA;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t a = 0; a < A.dim(); ++a) {
      const Vector b = A.basis_vector(a);
      fA.push_back(M.f(k, b));
      gA.push_back(M.g(k, b));
      phiA.push_back(w.phi(k, a));
      psiA.push_back(w.psi(k, a));
    }
  std::vector<Matrix> fx;
  for (std::size_t k = 0; k < s; ++k) fx.push_back(M.f(k, x));

  LemmaReport report;
  std::vector<Vector> us{u0};
  for (std::size_t m = 0; m <= depth && report.passed; ++m) {
    const Vector um = us[m];
    us.push_back(gh * um);
    std::vector<Vector> lower(ann.basis_vectors());
    lower.insert(lower.end(), us.begin(), us.begin() + static_cast<std::ptrdiff_t>(m));
    const Subspace below = Subspace::span(M.vdim(), lower);
    for (std::size_t i = 0; i < fA.size(); ++i) {
      if (!below.contains(fA[i] * um - phiA[i] * um))
        report.fail("f_k(A) u_m at m = " + std::to_string(m));
      if (!below.contains(gA[i] * um - psiA[i] * um))
        report.fail("g_k(A) u_m at m = " + std::to_string(m));
    }
    lower.push_back(um);
    const Subspace upto = Subspace::span(M.vdim(), lower);
    for (std::size_t k = 0; k < s; ++k)
      if (!upto.contains(fx[k] * um - us[m + 1])) report.fail("f_k(x) u_m at m = " + std::to_string(m));
  }
  return report;
}

/// psi'_h(<x, a>_k) = 0 for the basis a of A and psi'_h(<x, x>_k) = 0, for a
/// weight over A that some nonzero vector realizes.
inline LemmaReport trace_vanishing_check(const LieLikeAlgebra& L, const Subspace& A, const Vector& x,
                                         const OrdinaryModule& M, const Weight& w) {
  detail::check_codim1_setup(L, A, x);
  if (!(M.algebra() == L)) throw Error(ErrorKind::SetupInvalid, "module is over a different algebra");
  if (w.s() != M.s() || w.n() != A.dim()) throw Error(ErrorKind::SetupInvalid, "weight shape over A");
  if (weight_space(M, A, w).is_zero()) throw Error(ErrorKind::SetupInvalid, "no nonzero vector has this weight");

  LemmaReport report;
  const std::size_t s = M.s();
  for (std::size_t k = 0; k < s; ++k) {
    std::vector<Vector> args;
    for (std::size_t a = 0; a < A.dim(); ++a) args.push_back(bracket(L, x, A.basis_vector(a), k));
    args.push_back(bracket(L, x, x, k));
    for (std::size_t h = 0; h < s; ++h)
      for (std::size_t i = 0; i < args.size(); ++i)
        if (!is_zero(detail::functional_on(A, w, true, h, args[i]))) {
          const bool xx = i + 1 == args.size();
          report.fail("psi'_" + std::to_string(h) + "(<x, " + (xx ? std::string("x") : "a" + std::to_string(i)) +
                      ">_" + std::to_string(k) + ") != 0");
        }
  }
  return report;
}

/// f_h(x) maps the joint weight space U_phi ∩ U_psi of A into itself.
inline bool weight_space_invariance_check(const OrdinaryModule& M, const Subspace& A, const Vector& x,
                                          const Weight& w) {
  const Subspace U = weight_space(M, A, w);
  for (std::size_t h = 0; h < M.s(); ++h)
    if (!maps_into(M.f(h, x), U, U)) return false;
  return true;
}

}  // namespace liealg

#endif
