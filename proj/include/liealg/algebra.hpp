#ifndef LIEALG_ALGEBRA_HPP
#define LIEALG_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liealg/linalg.hpp"

namespace liealg {

/// A finite-dimensional algebra carrying a finite family of brackets
/// <.,.>_k, k = 0..s-1, given by structure constants:
/// structure(k, i, j) is the coordinate vector of <e_i, e_j>_k.
class LieLikeAlgebra {
 public:
  LieLikeAlgebra() = default;

  /// All-zero (abelian) algebra.
  LieLikeAlgebra(std::size_t dim, std::size_t s) : dim_(dim), s_(s), c_(s * dim * dim, Vector(dim)) {
    if (s == 0 && dim > 0) throw Error(ErrorKind::DimensionMismatch, "an algebra of positive dimension needs s >= 1");
  }

  std::size_t dim() const { return dim_; }
  std::size_t s() const { return s_; }

  const Vector& structure(std::size_t k, std::size_t i, std::size_t j) const { return c_.at(index(k, i, j)); }

  void set_structure(std::size_t k, std::size_t i, std::size_t j, Vector v) {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "structure constant vector length");
    c_.at(index(k, i, j)) = std::move(v);
    validated_ = false;
  }

  /// Set by mark_validated() after check_algebra found no violation.
  bool validated() const { return validated_; }
  void mark_validated() { validated_ = true; }

  friend bool operator==(const LieLikeAlgebra& a, const LieLikeAlgebra& b) {
    return a.dim_ == b.dim_ && a.s_ == b.s_ && a.c_ == b.c_;
  }

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
    if (k >= s_ || i >= dim_ || j >= dim_) throw Error(ErrorKind::DimensionMismatch, "structure constant index");
    return (k * dim_ + i) * dim_ + j;
  }

  std::size_t dim_ = 0;
  std::size_t s_ = 1;
  std::vector<Vector> c_;
  bool validated_ = false;
};

/// <x, y>_k, extended bilinearly from the structure constants.
inline Vector bracket(const LieLikeAlgebra& L, const Vector& x, const Vector& y, std::size_t k) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket argument length");
  if (k >= L.s()) throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      axpy(x[i] * y[j], L.structure(k, i, j), out);
    }
  }
  return out;
}

struct AlgebraViolation {
  enum class Identity { JacobiLike, IndexSwap };
  Identity identity;
  std::size_t i, j, l, k, h;
  Vector residual;
};

inline const char* to_string(AlgebraViolation::Identity id) {
  return id == AlgebraViolation::Identity::JacobiLike ? "jacobi-like" : "index-swap";
}

/// Checks on all basis triples (e_i, e_j, e_l) and index pairs (k, h):
///   <<x,y>_k,z>_h = <x,<y,z>_h>_k + <<x,z>_h,y>_k      (jacobi-like)
///   <<x,y>_k,z>_h = <<x,y>_h,z>_k                      (index-swap, k < h)
inline std::vector<AlgebraViolation> check_algebra(const LieLikeAlgebra& L) {
  std::vector<AlgebraViolation> out;
  const std::size_t n = L.dim(), s = L.s();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t h = 0; h < s; ++h)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l) {
            const Vector lhs = bracket(L, L.structure(k, i, j), e(l), h);
            Vector res = lhs - bracket(L, e(i), L.structure(h, j, l), k) - bracket(L, L.structure(h, i, l), e(j), k);
            if (!is_zero(res))
              out.push_back({AlgebraViolation::Identity::JacobiLike, i, j, l, k, h, std::move(res)});
            if (k < h) {
              Vector swap_res = lhs - bracket(L, L.structure(h, i, j), e(l), k);
              if (!is_zero(swap_res))
                out.push_back({AlgebraViolation::Identity::IndexSwap, i, j, l, k, h, std::move(swap_res)});
            }
          }
  return out;
}

/// Returns L marked as validated, or throws InvalidInstance.
inline LieLikeAlgebra validated(LieLikeAlgebra L) {
  if (!L.validated()) {
    auto v = check_algebra(L);
    if (!v.empty())
      throw Error(ErrorKind::InvalidInstance, std::string("algebra violates the ") + to_string(v.front().identity) +
                                                  " identity");
    L.mark_validated();
  }
  return L;
}

struct TrivialityWitness {
  std::size_t base_index = 0;
  std::vector<Scalar> factors;  // <.,.>_k = factors[k] * <.,.>_{base_index}
};

/// An algebra is trivial when a single bracket and a map phi: S -> Q give
/// <x,y>_k = phi(k) <x,y> for every k, i.e. when all structure tensors are
/// pairwise proportional (zero tensors allowed).
inline std::optional<TrivialityWitness> is_trivial(const LieLikeAlgebra& L) {
  const std::size_t n = L.dim(), s = L.s();
  TrivialityWitness w;
  w.factors.assign(s, Scalar(0));
  std::optional<std::size_t> base;
  std::size_t bi = 0, bj = 0, bl = 0;
  for (std::size_t k = 0; k < s && !base; ++k)
    for (std::size_t i = 0; i < n && !base; ++i)
      for (std::size_t j = 0; j < n && !base; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(L.structure(k, i, j)[l]) != 0) {
            base = k;
            bi = i, bj = j, bl = l;
            break;
          }
  if (!base) {
    // every bracket vanishes
    if (s > 0) w.factors[0] = 1;
    return w;
  }
  w.base_index = *base;
  const Scalar pivot = L.structure(*base, bi, bj)[bl];
  for (std::size_t k = 0; k < s; ++k) {
    const Scalar factor = L.structure(k, bi, bj)[bl] / pivot;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (L.structure(k, i, j) != factor * L.structure(*base, i, j)) return std::nullopt;
    w.factors[k] = factor;
  }
  return w;
}

/// <I, L>_k and <L, I>_k lie in I for every k.
inline bool is_ideal(const LieLikeAlgebra& L, const Subspace& I) {
  const std::size_t n = L.dim();
  if (I.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "ideal ambient dimension");
  for (std::size_t a = 0; a < I.dim(); ++a) {
    const Vector b = I.basis_vector(a);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector e = unit_vector(n, j);
      for (std::size_t k = 0; k < L.s(); ++k)
        if (!I.contains(bracket(L, b, e, k)) || !I.contains(bracket(L, e, b, k))) return false;
    }
  }
  return true;
}

/// sum_k <P, Q>_k
inline Subspace bracket_span(const LieLikeAlgebra& L, const Subspace& P, const Subspace& Q) {
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < P.dim(); ++a)
    for (std::size_t b = 0; b < Q.dim(); ++b)
      for (std::size_t k = 0; k < L.s(); ++k) gens.push_back(bracket(L, P.basis_vector(a), Q.basis_vector(b), k));
  return Subspace::span(L.dim(), gens);
}

/// D^1 L = L, D^{n+1} L = sum_k <D^n L, D^n L>_k, listed until the sequence
/// stabilizes (the stable term appears once).
inline std::vector<Subspace> derived_series(const LieLikeAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

struct Solvability {
  bool solvable = false;
  std::size_t depth = 0;  // first n with D^n L = 0 when solvable
};

inline Solvability is_solvable(const LieLikeAlgebra& L) {
  auto series = derived_series(L);
  if (series.back().is_zero()) return {true, series.size()};
  return {false, 0};
}

struct Codim1Split {
  Subspace ideal;
  Vector x;
};

/// L = A (+) Qx with D^2 L contained in A. The canonical basis of D^2 L is
/// extended by standard basis vectors in index order; x is the last one
/// appended and A is spanned by everything else.
inline Codim1Split split_codim1(const LieLikeAlgebra& L) {
  const std::size_t n = L.dim();
  if (n == 0) throw Error(ErrorKind::NotSolvable, "cannot split a zero-dimensional algebra");
  const Subspace d2 = bracket_span(L, Subspace::full(n), Subspace::full(n));
  if (d2.is_full()) throw Error(ErrorKind::NotSolvable, "D^2 L = L");
  std::vector<Vector> gens = d2.basis_vectors();
  std::vector<Vector> appended;
  Subspace current = d2;
  for (std::size_t i = 0; i < n && !current.is_full(); ++i) {
    Vector e = unit_vector(n, i);
    if (current.contains(e)) continue;
    gens.push_back(e);
    appended.push_back(e);
    current = Subspace::span(n, gens);
  }
  Vector x = appended.back();
  gens.pop_back();
  return {Subspace::span(n, gens), std::move(x)};
}

/// Structure constants of the bracket-closed subspace A in its canonical basis.
inline LieLikeAlgebra restrict_algebra(const LieLikeAlgebra& L, const Subspace& A) {
  if (A.ambient_dim() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "subalgebra ambient dimension");
  const std::size_t d = A.dim();
  LieLikeAlgebra sub(d, L.s());
  for (std::size_t k = 0; k < L.s(); ++k)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        auto coords = A.try_coordinates(bracket(L, A.basis_vector(a), A.basis_vector(b), k));
        if (!coords) throw Error(ErrorKind::NotClosed, "subspace is not closed under the brackets");
        sub.set_structure(k, a, b, std::move(*coords));
      }
  if (L.validated()) sub.mark_validated();
  return sub;
}

/// Same algebra written in the basis e'_a = sum_i Q(i, a) e_i.
inline LieLikeAlgebra change_basis(const LieLikeAlgebra& L, const Matrix& Q) {
  const std::size_t n = L.dim();
  if (Q.rows() != n || Q.cols() != n) throw Error(ErrorKind::DimensionMismatch, "algebra basis change");
  const Matrix Qinv = inverse(Q);
  LieLikeAlgebra out(n, L.s());
  for (std::size_t k = 0; k < L.s(); ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out.set_structure(k, a, b, Qinv * bracket(L, Q.col(a), Q.col(b), k));
  return out;
}

/// Brackets act componentwise; cross brackets vanish. Both summands need the
/// same index count.
inline LieLikeAlgebra direct_sum(const LieLikeAlgebra& A, const LieLikeAlgebra& B) {
  if (A.s() != B.s()) throw Error(ErrorKind::AlgebraMismatch, "direct sum needs equal index counts");
  const std::size_t n = A.dim() + B.dim();
  LieLikeAlgebra out(n, A.s());
  for (std::size_t k = 0; k < A.s(); ++k) {
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        Vector v(n);
        for (std::size_t l = 0; l < A.dim(); ++l) v[l] = A.structure(k, i, j)[l];
        out.set_structure(k, i, j, std::move(v));
      }
    for (std::size_t i = 0; i < B.dim(); ++i)
      for (std::size_t j = 0; j < B.dim(); ++j) {
        Vector v(n);
        for (std::size_t l = 0; l < B.dim(); ++l) v[A.dim() + l] = B.structure(k, i, j)[l];
        out.set_structure(k, A.dim() + i, A.dim() + j, std::move(v));
      }
  }
  return out;
}

}  // namespace liealg

#endif
