#ifndef LIEALG_TESTS_SUPPORT_HPP
#define LIEALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "liealg/liealg.hpp"

namespace testing_support {

using namespace liealg;

inline Scalar q(long num, long den) {
  Scalar a{Integer(num), Integer(den)};
  a.canonicalize();
  return a;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    Vector v;
    for (long a : r) v.emplace_back(a);
    cols = v.size();
    rs.push_back(std::move(v));
  }
  return Matrix::from_rows(cols, rs);
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long a : xs) v.emplace_back(a);
  return v;
}

inline Matrix diag(std::initializer_list<long> xs) {
  Matrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (long a : xs) m(i, i) = a, ++i;
  return m;
}

/// <e2, e2>_0 = e1.
inline LieLikeAlgebra leib2() {
  LieLikeAlgebra L(2, 1);
  L.set_structure(0, 1, 1, vec({1, 0}));
  return L;
}

/// Leib2 with the second bracket twice the first.
inline LieLikeAlgebra bundle2() {
  LieLikeAlgebra L(2, 2);
  L.set_structure(0, 1, 1, vec({1, 0}));
  L.set_structure(1, 1, 1, vec({2, 0}));
  return L;
}

/// <e3, e3>_0 = e1, <e3, e3>_1 = e2.
inline LieLikeAlgebra nt3() {
  LieLikeAlgebra L(3, 2);
  L.set_structure(0, 2, 2, vec({1, 0, 0}));
  L.set_structure(1, 2, 2, vec({0, 1, 0}));
  return L;
}

/// Lie algebra [t, n] = n (n = e1, t = e2), bracket k scaled by k + 1.
inline LieLikeAlgebra bundled_lie(std::size_t s = 2) {
  LieLikeAlgebra L(2, s);
  for (std::size_t k = 0; k < s; ++k) {
    const long c = static_cast<long>(k) + 1;
    L.set_structure(k, 1, 0, vec({c, 0}));
    L.set_structure(k, 0, 1, vec({-c, 0}));
  }
  return L;
}

/// Small hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Scalar scalar(long bound) {
    Scalar a{Integer(integer(-bound, bound)), Integer(integer(1, 3))};
    a.canonicalize();
    return a;
  }

  Matrix matrix(std::size_t r, std::size_t c, long bound, int zero_percent = 30) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (integer(0, 99) >= zero_percent) m(i, j) = scalar(bound);
    return m;
  }

  /// Upper-triangular with integer diagonal, then conjugated by a unimodular
  /// matrix: rational spectrum known in advance.
  Matrix split_matrix(std::size_t n, long bound, std::vector<Scalar>& diagonal) {
    Matrix T(n, n);
    diagonal.clear();
    for (std::size_t i = 0; i < n; ++i) {
      T(i, i) = integer(-bound, bound);
      diagonal.push_back(T(i, i));
      for (std::size_t j = i + 1; j < n; ++j) T(i, j) = integer(-bound, bound);
    }
    Matrix P = Matrix::identity(n);
    for (std::size_t step = 0; n > 1 && step < 2 * n; ++step) {
      const std::size_t a = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t b = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (b >= a) ++b;
      const long c = integer(0, 1) ? 1 : -1;
      for (std::size_t col = 0; col < n; ++col) P(a, col) += Scalar(c) * P(b, col);
    }
    return P * T * inverse(P);
  }

  Subspace subspace(std::size_t n, std::size_t gens, long bound) {
    std::vector<Vector> vs;
    for (std::size_t g = 0; g < gens; ++g) vs.push_back(matrix(1, n, bound).row(0));
    return Subspace::span(n, vs);
  }

 private:
  std::mt19937_64 rng_;
};

struct CorpusItem {
  GeneratorSpec spec;
  Instance instance;
};

/// Every construction, dims 1..6, s 1..3, seeds 1..3: 270 instances.
inline std::vector<CorpusItem> corpus() {
  std::vector<CorpusItem> out;
  for (auto c : {Construction::Abelian, Construction::ScaledLeibnizBundle, Construction::GradedNilpotent,
                 Construction::DirectSum, Construction::BasisChanged})
    for (std::size_t d = 1; d <= 6; ++d)
      for (std::size_t s = 1; s <= 3; ++s)
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
          GeneratorSpec spec{c, d, s, seed, 2};
          out.push_back({spec, generate(spec)});
        }
  return out;
}

}  // namespace testing_support

#endif
