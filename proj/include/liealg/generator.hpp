#ifndef LIEALG_GENERATOR_HPP
#define LIEALG_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liealg/io.hpp"

namespace liealg {

enum class Construction { Abelian, ScaledLeibnizBundle, GradedNilpotent, DirectSum, BasisChanged };

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::Abelian: return "abelian";
    case Construction::ScaledLeibnizBundle: return "scaled-leibniz-bundle";
    case Construction::GradedNilpotent: return "graded-nilpotent";
    case Construction::DirectSum: return "direct-sum";
    case Construction::BasisChanged: return "basis-changed";
  }
  return "unknown";
}

inline std::optional<Construction> construction_from_string(const std::string& s) {
  for (auto c : {Construction::Abelian, Construction::ScaledLeibnizBundle, Construction::GradedNilpotent,
                 Construction::DirectSum, Construction::BasisChanged})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct GeneratorSpec {
  Construction construction = Construction::Abelian;
  std::size_t dim = 0;
  std::size_t s = 1;
  std::uint64_t seed = 0;
  unsigned coefficient_bound = 2;
};

namespace detail {

/// mt19937_64 plus a rejection-sampled integer draw, so the stream of draws
/// does not depend on the standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

  long nonzero(long bound) {
    long v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

inline Vector int_vector(std::size_t n, std::size_t at, long value) {
  Vector v(n);
  v[at] = value;
  return v;
}

/// V1 = first ceil(n/2) coordinates, V2 the rest; only <V2, V2>_k -> V1 is
/// populated, so every nested bracket vanishes.
inline LieLikeAlgebra graded_nilpotent(std::size_t n, std::size_t s, Rng& rng, long bound) {
  LieLikeAlgebra L(n, s);
  const std::size_t v1 = (n + 1) / 2;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = v1; i < n; ++i)
      for (std::size_t j = v1; j < n; ++j) {
        Vector c(n);
        for (std::size_t l = 0; l < v1; ++l) c[l] = rng.uniform(-bound, bound);
        L.set_structure(k, i, j, std::move(c));
      }
  return L;
}

/// Base Leibniz algebra N (+) Qt with N abelian: <n, t> = D n for an integer
/// upper-triangular D, <t, n> = E n with E = 0 or E = -D, <t, t> = c in N
/// (c = 0 when E = -D). Index k uses scale * that, scale_0 = 1.
inline LieLikeAlgebra scaled_leibniz_bundle(std::size_t n, std::size_t s, Rng& rng, long bound) {
  LieLikeAlgebra L(n, s);
  if (n == 0) return L;
  const std::size_t t = n - 1;
  Matrix D(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i; j < t; ++j) D(i, j) = rng.uniform(-bound, bound);
  const bool lie = rng.chance(1, 2);
  Vector c(n);
  if (!lie)
    for (std::size_t i = 0; i < t; ++i) c[i] = rng.uniform(-bound, bound);
  std::vector<long> scale{1};
  for (std::size_t k = 1; k < s; ++k) scale.push_back(rng.nonzero(bound));

  for (std::size_t k = 0; k < s; ++k) {
    const Scalar a = Scalar(static_cast<long>(scale[k]));
    for (std::size_t j = 0; j < t; ++j) {
      Vector right(n);
      for (std::size_t i = 0; i < t; ++i) right[i] = a * D(i, j);
      if (lie) L.set_structure(k, t, j, Scalar(-1) * right);
      L.set_structure(k, j, t, std::move(right));
    }
    L.set_structure(k, t, t, a * c);
  }
  return L;
}

/// N (+) Qt with <n_i, t>_k = d_{k,i} n_i and <t, t>_k = c_k supported on the
/// coordinates where every d_{., i} vanishes; genuinely different brackets
/// per index when s > 1.
inline LieLikeAlgebra diagonal_semidirect(std::size_t n, std::size_t s, Rng& rng, long bound) {
  LieLikeAlgebra L(n, s);
  if (n == 0) return L;
  const std::size_t t = n - 1;
  std::vector<bool> free(t);
  std::vector<std::vector<long>> d(s, std::vector<long>(t));
  for (std::size_t i = 0; i < t; ++i) {
    free[i] = rng.chance(1, 3);
    if (!free[i])
      for (std::size_t k = 0; k < s; ++k) d[k][i] = rng.uniform(-bound, bound);
  }
  for (std::size_t k = 0; k < s; ++k) {
    Vector c(n);
    for (std::size_t i = 0; i < t; ++i) {
      if (free[i]) c[i] = rng.uniform(-bound, bound);
      else if (d[k][i] != 0) L.set_structure(k, i, t, int_vector(n, i, d[k][i]));
    }
    L.set_structure(k, t, t, std::move(c));
  }
  return L;
}

/// Identity modified by random elementary row operations and a permutation;
/// determinant +-1.
inline Matrix unimodular(std::size_t n, Rng& rng) {
  Matrix Q = Matrix::identity(n);
  if (n < 2) return Q;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Scalar c = static_cast<long>(rng.nonzero(1));
    for (std::size_t col = 0; col < n; ++col) Q(i, col) += c * Q(j, col);
  }
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i)));
    for (std::size_t col = 0; col < n; ++col) std::swap(Q(i, col), Q(j, col));
  }
  return Q;
}

inline OrdinaryModule doubled_adjoint(const LieLikeAlgebra& L) { return direct_sum(adjoint(L), adjoint(L)); }

}  // namespace detail

inline json spec_to_json(const GeneratorSpec& spec) {
  json out;
  out["construction"] = to_string(spec.construction);
  out["dim"] = spec.dim;
  out["s"] = spec.s;
  out["seed"] = spec.seed;
  out["coefficient_bound"] = spec.coefficient_bound;
  return out;
}

/// Deterministic in the spec. The algebra is valid and solvable, every
/// operator has rational spectrum and the module is the adjoint, a direct sum
/// of two adjoints, or a basis-changed copy of one of those.
inline Instance generate(const GeneratorSpec& spec) {
  if (spec.s == 0 || spec.coefficient_bound == 0) throw Error(ErrorKind::InvalidInstance, "generator needs s >= 1 and bound >= 1");
  detail::Rng rng(spec.seed);
  const long b = spec.coefficient_bound;
  const std::size_t n = spec.dim, s = spec.s;

  auto direct_sum_pair = [&]() {
    const std::size_t n1 = n / 2;
    LieLikeAlgebra L = direct_sum(detail::graded_nilpotent(n1, s, rng, b), detail::diagonal_semidirect(n - n1, s, rng, b));
    return std::pair{L, detail::doubled_adjoint(L)};
  };

  std::optional<LieLikeAlgebra> L;
  std::optional<OrdinaryModule> M;
  switch (spec.construction) {
    case Construction::Abelian:
      L.emplace(n, s);
      M = adjoint(*L);
      break;
    case Construction::GradedNilpotent:
      L = detail::graded_nilpotent(n, s, rng, b);
      M = adjoint(*L);
      break;
    case Construction::ScaledLeibnizBundle:
      L = detail::scaled_leibniz_bundle(n, s, rng, b);
      M = adjoint(*L);
      break;
    case Construction::DirectSum: {
      auto [a, m] = direct_sum_pair();
      L = std::move(a);
      M = std::move(m);
      break;
    }
    case Construction::BasisChanged: {
      const auto base = rng.uniform(0, 2);
      if (base == 0) {
        L = detail::graded_nilpotent(n, s, rng, b);
        M = adjoint(*L);
      } else if (base == 1) {
        L = detail::scaled_leibniz_bundle(n, s, rng, b);
        M = adjoint(*L);
      } else {
        auto [a, m] = direct_sum_pair();
        L = std::move(a);
        M = std::move(m);
      }
      const Matrix Q = detail::unimodular(n, rng);
      const Matrix P = inverse(Q);
      Matrix PV = P;
      while (PV.rows() < M->vdim()) PV = block_diagonal(PV, P);
      OrdinaryModule moved = change_basis(reindex_algebra(*M, Q), PV);
      L = moved.algebra();
      M = std::move(moved);
      break;
    }
  }

  if (!check_algebra(*L).empty()) throw Error(ErrorKind::InvalidInstance, "generated algebra violates its identities");
  if (!is_solvable(*L).solvable) throw Error(ErrorKind::InvalidInstance, "generated algebra is not solvable");
  if (!check_module(*M).empty()) throw Error(ErrorKind::InvalidInstance, "generated module violates its identities");
  L->mark_validated();
  OrdinaryModule out(*L, M->vdim());
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      out.set_F(k, i, M->F(k, i));
      out.set_G(k, i, M->G(k, i));
    }
  return Instance{*L, std::move(out), spec_to_json(spec)};
}

}  // namespace liealg

#endif
