#ifndef LIEALG_MODULE_HPP
#define LIEALG_MODULE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

/// Ordinary module over a Lie-like algebra: right maps f_k and left maps g_k,
/// stored per algebra basis element as f_k(e_i) = F(k, i), g_k(e_i) = G(k, i).
class OrdinaryModule {
 public:
  OrdinaryModule() = default;

  /// Zero module of dimension vdim.
  OrdinaryModule(LieLikeAlgebra algebra, std::size_t vdim)
      : algebra_(std::move(algebra)),
        vdim_(vdim),
        F_(algebra_.s() * algebra_.dim(), Matrix(vdim, vdim)),
        G_(algebra_.s() * algebra_.dim(), Matrix(vdim, vdim)) {}

  const LieLikeAlgebra& algebra() const { return algebra_; }
  std::size_t vdim() const { return vdim_; }
  std::size_t s() const { return algebra_.s(); }
  std::size_t n() const { return algebra_.dim(); }

  const Matrix& F(std::size_t k, std::size_t i) const { return F_.at(index(k, i)); }
  const Matrix& G(std::size_t k, std::size_t i) const { return G_.at(index(k, i)); }

  void set_F(std::size_t k, std::size_t i, Matrix m) { F_.at(index(k, i)) = checked(std::move(m)); }
  void set_G(std::size_t k, std::size_t i, Matrix m) { G_.at(index(k, i)) = checked(std::move(m)); }

  /// f_k(z) for an arbitrary algebra element z.
  Matrix f(std::size_t k, const Vector& z) const { return combine(F_, k, z); }
  Matrix g(std::size_t k, const Vector& z) const { return combine(G_, k, z); }

  friend bool operator==(const OrdinaryModule& a, const OrdinaryModule& b) {
    return a.algebra_ == b.algebra_ && a.vdim_ == b.vdim_ && a.F_ == b.F_ && a.G_ == b.G_;
  }

 private:
  std::size_t index(std::size_t k, std::size_t i) const {
    if (k >= s() || i >= n()) throw Error(ErrorKind::DimensionMismatch, "module operator index");
    return k * n() + i;
  }

  Matrix checked(Matrix m) const {
    if (m.rows() != vdim_ || m.cols() != vdim_) throw Error(ErrorKind::DimensionMismatch, "module operator shape");
    return m;
  }

  Matrix combine(const std::vector<Matrix>& ops, std::size_t k, const Vector& z) const {
    if (z.size() != n()) throw Error(ErrorKind::DimensionMismatch, "algebra element length");
    Matrix out(vdim_, vdim_);
    for (std::size_t i = 0; i < n(); ++i) out.add_scaled(z[i], ops[index(k, i)]);
    return out;
  }

  LieLikeAlgebra algebra_;
  std::size_t vdim_ = 0;
  std::vector<Matrix> F_;
  std::vector<Matrix> G_;
};

struct ModuleViolation {
  /// f-bracket:   f_h(<x,y>_k) = [f_h(x), f_k(y)]
  /// g-bracket:   g_h(<x,y>_k) = [g_h(x), f_k(y)]
  /// g-product:   g_k(x) g_h(y) = g_h(x) f_k(y) = g_k(x) f_h(y)
  /// f-symmetry:  f_k(x) f_h(y) = f_h(x) f_k(y)
  /// fg-symmetry: f_k(x) g_h(y) = f_h(x) g_k(y)
  enum class Axiom { FBracket, GBracket, GProduct, FSymmetry, FGSymmetry };
  Axiom axiom;
  std::size_t k, h, i, j;
  Matrix residual;
};

inline const char* to_string(ModuleViolation::Axiom a) {
  switch (a) {
    case ModuleViolation::Axiom::FBracket: return "f-bracket";
    case ModuleViolation::Axiom::GBracket: return "g-bracket";
    case ModuleViolation::Axiom::GProduct: return "g-product";
    case ModuleViolation::Axiom::FSymmetry: return "f-symmetry";
    case ModuleViolation::Axiom::FGSymmetry: return "fg-symmetry";
  }
  return "unknown";
}

namespace detail {

/// Pairwise products X(k,i) * Y(h,j) for all index/basis combinations.
class ProductTable {
 public:
  ProductTable(const OrdinaryModule& M, bool left_is_f, bool right_is_f) : s_(M.s()), n_(M.n()) {
    table_.reserve(s_ * n_ * s_ * n_);
    for (std::size_t k = 0; k < s_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t h = 0; h < s_; ++h)
          for (std::size_t j = 0; j < n_; ++j) {
            const Matrix& a = left_is_f ? M.F(k, i) : M.G(k, i);
            const Matrix& b = right_is_f ? M.F(h, j) : M.G(h, j);
            table_.push_back(a * b);
          }
  }
  const Matrix& operator()(std::size_t k, std::size_t i, std::size_t h, std::size_t j) const {
    return table_[((k * n_ + i) * s_ + h) * n_ + j];
  }

 private:
  std::size_t s_, n_;
  std::vector<Matrix> table_;
};

}  // namespace detail

/// Checks every module axiom on all basis pairs (e_i, e_j) and index pairs
/// (k, h); bilinearity extends the identities to all of L.
inline std::vector<ModuleViolation> check_module(const OrdinaryModule& M) {
  std::vector<ModuleViolation> out;
  const LieLikeAlgebra& L = M.algebra();
  const std::size_t s = M.s(), n = M.n();
  const detail::ProductTable ff(M, true, true), gf(M, false, true), fg(M, true, false), gg(M, false, false);
  using A = ModuleViolation::Axiom;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t h = 0; h < s; ++h)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector& xy_k = L.structure(k, i, j);
          // f_h(<x,y>_k) = f_h(x) f_k(y) - f_k(y) f_h(x)
          Matrix r = M.f(h, xy_k) - ff(h, i, k, j) + ff(k, j, h, i);
          if (!r.is_zero()) out.push_back({A::FBracket, k, h, i, j, std::move(r)});
          // g_h(<x,y>_k) = g_h(x) f_k(y) - f_k(y) g_h(x)
          r = M.g(h, xy_k) - gf(h, i, k, j) + fg(k, j, h, i);
          if (!r.is_zero()) out.push_back({A::GBracket, k, h, i, j, std::move(r)});
          // g_k(x) g_h(y) = g_h(x) f_k(y) = g_k(x) f_h(y)
          r = gg(k, i, h, j) - gf(h, i, k, j);
          if (r.is_zero()) r = gg(k, i, h, j) - gf(k, i, h, j);
          if (!r.is_zero()) out.push_back({A::GProduct, k, h, i, j, std::move(r)});
          if (k < h) {
            r = ff(k, i, h, j) - ff(h, i, k, j);
            if (!r.is_zero()) out.push_back({A::FSymmetry, k, h, i, j, std::move(r)});
            r = fg(k, i, h, j) - fg(h, i, k, j);
            if (!r.is_zero()) out.push_back({A::FGSymmetry, k, h, i, j, std::move(r)});
          }
        }
  return out;
}

struct DerivedIdentityReport {
  struct Failure {
    bool left;  // false: f_h(<x,y>_k) = f_k(<x,y>_h), true: the g analogue
    std::size_t k, h, i, j;
  };
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Index-swap consequences f_h(<x,y>_k) = f_k(<x,y>_h) and
/// g_h(<x,y>_k) = g_k(<x,y>_h). They follow from the module axioms over a
/// valid algebra, so a failure means an internal inconsistency.
inline DerivedIdentityReport check_derived_identities(const OrdinaryModule& M) {
  DerivedIdentityReport rep;
  const LieLikeAlgebra& L = M.algebra();
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t h = k + 1; h < M.s(); ++h)
      for (std::size_t i = 0; i < M.n(); ++i)
        for (std::size_t j = 0; j < M.n(); ++j) {
          const Vector& xy_k = L.structure(k, i, j);
          const Vector& xy_h = L.structure(h, i, j);
          if (M.f(h, xy_k) != M.f(k, xy_h)) rep.failures.push_back({false, k, h, i, j});
          if (M.g(h, xy_k) != M.g(k, xy_h)) rep.failures.push_back({true, k, h, i, j});
        }
  return rep;
}

/// The module (L, -r_k, l_k): f_k(x)(a) = -<a, x>_k, g_k(x)(a) = <x, a>_k.
inline OrdinaryModule adjoint(const LieLikeAlgebra& L) {
  const std::size_t n = L.dim();
  OrdinaryModule M(L, n);
  for (std::size_t k = 0; k < L.s(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Matrix f(n, n), g(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < n; ++r) {
          f(r, a) = -L.structure(k, a, i)[r];
          g(r, a) = L.structure(k, i, a)[r];
        }
      M.set_F(k, i, std::move(f));
      M.set_G(k, i, std::move(g));
    }
  return M;
}

/// Span of (g_h(x) - f_k(x))(v) over all x in L, v in V and h, k.
inline Subspace plus_annihilator(const OrdinaryModule& M) {
  std::vector<Vector> gens;
  const std::size_t m = M.vdim();
  for (std::size_t h = 0; h < M.s(); ++h)
    for (std::size_t k = 0; k < M.s(); ++k)
      for (std::size_t i = 0; i < M.n(); ++i) {
        const Matrix d = M.G(h, i) - M.F(k, i);
        for (std::size_t c = 0; c < m; ++c) gens.push_back(d.col(c));
      }
  return Subspace::span(m, gens);
}

inline bool is_submodule(const OrdinaryModule& M, const Subspace& U) {
  if (U.ambient_dim() != M.vdim()) throw Error(ErrorKind::DimensionMismatch, "submodule ambient dimension");
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t i = 0; i < M.n(); ++i)
      if (!maps_into(M.F(k, i), U, U) || !maps_into(M.G(k, i), U, U)) return false;
  return true;
}

/// The same vector space as a module over the subalgebra A, whose basis is the
/// canonical basis of A.
inline OrdinaryModule restrict_module(const OrdinaryModule& M, const Subspace& A) {
  LieLikeAlgebra sub = restrict_algebra(M.algebra(), A);
  OrdinaryModule out(std::move(sub), M.vdim());
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t a = 0; a < A.dim(); ++a) {
      const Vector b = A.basis_vector(a);
      out.set_F(k, a, M.f(k, b));
      out.set_G(k, a, M.g(k, b));
    }
  return out;
}

/// Every operator X replaced by P X P^{-1}.
inline OrdinaryModule change_basis(const OrdinaryModule& M, const Matrix& P) {
  if (P.rows() != M.vdim() || P.cols() != M.vdim()) throw Error(ErrorKind::DimensionMismatch, "module basis change");
  const Matrix Pinv = inverse(P);
  OrdinaryModule out(M.algebra(), M.vdim());
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t i = 0; i < M.n(); ++i) {
      out.set_F(k, i, P * M.F(k, i) * Pinv);
      out.set_G(k, i, P * M.G(k, i) * Pinv);
    }
  return out;
}

/// The module over change_basis(L, Q): operators are re-attached to the new
/// algebra basis e'_a = sum_i Q(i, a) e_i; V is untouched.
inline OrdinaryModule reindex_algebra(const OrdinaryModule& M, const Matrix& Q) {
  OrdinaryModule out(change_basis(M.algebra(), Q), M.vdim());
  for (std::size_t k = 0; k < M.s(); ++k)
    for (std::size_t a = 0; a < M.n(); ++a) {
      const Vector q = Q.col(a);
      out.set_F(k, a, M.f(k, q));
      out.set_G(k, a, M.g(k, q));
    }
  return out;
}

/// Block-diagonal operators on V1 (+) V2.
inline OrdinaryModule direct_sum(const OrdinaryModule& M1, const OrdinaryModule& M2) {
  if (!(M1.algebra() == M2.algebra())) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  OrdinaryModule out(M1.algebra(), M1.vdim() + M2.vdim());
  for (std::size_t k = 0; k < M1.s(); ++k)
    for (std::size_t i = 0; i < M1.n(); ++i) {
      out.set_F(k, i, block_diagonal(M1.F(k, i), M2.F(k, i)));
      out.set_G(k, i, block_diagonal(M1.G(k, i), M2.G(k, i)));
    }
  return out;
}

}  // namespace liealg

#endif
