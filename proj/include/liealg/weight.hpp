#ifndef LIEALG_WEIGHT_HPP
#define LIEALG_WEIGHT_HPP

#include <cstddef>
#include <vector>

#include "liealg/module.hpp"

namespace liealg {

/// Functionals phi_k, psi_k stored by their values on the algebra basis.
class Weight {
 public:
  Weight() = default;
  Weight(std::size_t s, std::size_t n) : s_(s), n_(n), phi_(s * n), psi_(s * n) {}

  std::size_t s() const { return s_; }
  std::size_t n() const { return n_; }

  Scalar& phi(std::size_t k, std::size_t i) { return phi_.at(k * n_ + i); }
  const Scalar& phi(std::size_t k, std::size_t i) const { return phi_.at(k * n_ + i); }
  Scalar& psi(std::size_t k, std::size_t i) { return psi_.at(k * n_ + i); }
  const Scalar& psi(std::size_t k, std::size_t i) const { return psi_.at(k * n_ + i); }

  Scalar phi_of(std::size_t k, const Vector& z) const { return apply(phi_, k, z); }
  Scalar psi_of(std::size_t k, const Vector& z) const { return apply(psi_, k, z); }

  bool phi_is_zero() const { return all_zero(phi_); }
  bool psi_is_zero() const { return all_zero(psi_); }
  bool phi_equals_psi() const { return phi_ == psi_; }

  Weight with_zero_psi() const {
    Weight w = *this;
    for (auto& v : w.psi_) v = 0;
    return w;
  }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Scalar apply(const std::vector<Scalar>& values, std::size_t k, const Vector& z) const {
    if (z.size() != n_) throw Error(ErrorKind::DimensionMismatch, "functional argument length");
    Scalar acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (sgn(z[i]) != 0) acc += z[i] * values[k * n_ + i];
    return acc;
  }

  static bool all_zero(const std::vector<Scalar>& v) {
    for (const auto& a : v)
      if (sgn(a) != 0) return false;
    return true;
  }

  std::size_t s_ = 0;
  std::size_t n_ = 0;
  std::vector<Scalar> phi_;
  std::vector<Scalar> psi_;
};

/// f_k(e_i) v = phi_k(e_i) v and g_k(e_i) v = psi_k(e_i) v for every basis
/// element and index, with v nonzero.
inline bool verify_weight(const OrdinaryModule& M, const Vector& v, const Weight& w) {
  if (v.size() != M.vdim() || is_zero(v)) return false;
  if (w.s() != M.s() || w.n() != M.n()) return false;
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t i = 0; i < M.n(); ++i) {
      if (M.F(k, i) * v != w.phi(k, i) * v) return false;
      if (M.G(k, i) * v != w.psi(k, i) * v) return false;
    }
  return true;
}

enum class Dichotomy { PsiZero, PhiEqualsPsi, Both, Violation };

inline const char* to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::PsiZero: return "psi-zero";
    case Dichotomy::PhiEqualsPsi: return "phi-equals-psi";
    case Dichotomy::Both: return "both";
    case Dichotomy::Violation: return "violation";
  }
  return "unknown";
}

/// Which side of "psi_k = 0 for all k, or phi_k = psi_k for all k" holds.
inline Dichotomy check_dichotomy(const Weight& w) {
  const bool psi_zero = w.psi_is_zero();
  const bool equal = w.phi_equals_psi();
  if (psi_zero && equal) return Dichotomy::Both;
  if (psi_zero) return Dichotomy::PsiZero;
  if (equal) return Dichotomy::PhiEqualsPsi;
  return Dichotomy::Violation;
}

/// Operators of the family f_k(a), g_k(a) for the canonical basis vectors a
/// of the subalgebra A, in the order (k, a).
inline std::vector<Matrix> restricted_f(const OrdinaryModule& M, const Subspace& A, std::size_t k) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < A.dim(); ++a) out.push_back(M.f(k, A.basis_vector(a)));
  return out;
}

inline std::vector<Matrix> restricted_g(const OrdinaryModule& M, const Subspace& A, std::size_t k) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < A.dim(); ++a) out.push_back(M.g(k, A.basis_vector(a)));
  return out;
}

/// Joint space U = U_phi ∩ U_psi of vectors u with f_k(a) u = phi_k(a) u and
/// g_k(a) u = psi_k(a) u for every canonical basis vector a of A; `w` is
/// indexed by that basis.
inline Subspace weight_space(const OrdinaryModule& M, const Subspace& A, const Weight& w) {
  if (A.ambient_dim() != M.n()) throw Error(ErrorKind::DimensionMismatch, "weight space subalgebra");
  if (w.s() != M.s() || w.n() != A.dim()) throw Error(ErrorKind::DimensionMismatch, "weight shape over subalgebra");
  std::vector<Matrix> eqs;
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t a = 0; a < A.dim(); ++a) {
      const Vector b = A.basis_vector(a);
      eqs.push_back(shifted(M.f(k, b), w.phi(k, a)));
      eqs.push_back(shifted(M.g(k, b), w.psi(k, a)));
    }
  if (eqs.empty()) return Subspace::full(M.vdim());
  return common_kernel(M.vdim(), eqs);
}

}  // namespace liealg

#endif
