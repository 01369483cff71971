#include <gtest/gtest.h>

#include "support.hpp"

using namespace liealg;
using namespace testing_support;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

const std::vector<CorpusItem>& shared_corpus() {
  static const std::vector<CorpusItem> c = corpus();
  return c;
}

/// [x, y] from a raw s = 1 tensor, written out without the library bracket.
Vector raw_bracket(const std::vector<std::vector<Vector>>& c, const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * y[j] * c[i][j][l];
  return out;
}

/// Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.
bool leibniz_holds(const LieLikeAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = L.structure(0, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, l);
        const Vector lhs = raw_bracket(c, x, raw_bracket(c, y, z));
        const Vector rhs = raw_bracket(c, raw_bracket(c, x, y), z) - raw_bracket(c, raw_bracket(c, x, z), y);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST(Bracket, Examples) {
  const auto L = leib2();
  EXPECT_EQ(bracket(L, Vector(2), vec({3, -1}), 0), Vector(2));
  EXPECT_EQ(bracket(L, e(2, 1), e(2, 1), 0), vec({1, 0}));
  EXPECT_EQ(bracket(L, e(2, 0), e(2, 1), 0), Vector(2));
  EXPECT_EQ(bracket(L, vec({5, 2}), vec({1, 3}), 0), vec({6, 0}));
}

TEST(Bracket, RejectsBadIndex) {
  const auto L = leib2();
  try {
    bracket(L, e(2, 0), e(2, 1), 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
  }
  EXPECT_THROW(bracket(L, e(3, 0), e(2, 1), 0), Error);
}

TEST(CheckAlgebra, Examples) {
  EXPECT_TRUE(check_algebra(LieLikeAlgebra(3, 2)).empty());
  EXPECT_TRUE(check_algebra(leib2()).empty());
  EXPECT_TRUE(check_algebra(bundle2()).empty());
  EXPECT_TRUE(check_algebra(nt3()).empty());
  EXPECT_TRUE(check_algebra(bundled_lie(3)).empty());

  auto bad = leib2();
  bad.set_structure(0, 0, 1, vec({0, 1}));
  ASSERT_FALSE(leibniz_holds(bad));
  const auto v = check_algebra(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().identity, AlgebraViolation::Identity::JacobiLike);
  EXPECT_FALSE(is_zero(v.front().residual));
}

TEST(CheckAlgebra, IndexSwapViolationIsLocated) {
  // each bracket alone is Leibniz, but <<e2,e2>_0, e2>_1 != <<e2,e2>_1, e2>_0
  LieLikeAlgebra L(2, 2);
  L.set_structure(0, 1, 1, vec({1, 0}));
  L.set_structure(1, 0, 1, vec({1, 0}));
  const auto v = check_algebra(L);
  bool swap_found = false;
  for (const auto& a : v)
    if (a.identity == AlgebraViolation::Identity::IndexSwap) {
      swap_found = true;
      EXPECT_LT(a.k, a.h);
    }
  EXPECT_TRUE(swap_found);
}

TEST(CheckAlgebra, OneDimensionalSelfBracketIsInvalid) {
  LieLikeAlgebra L(1, 1);
  L.set_structure(0, 0, 0, vec({1}));
  const auto v = check_algebra(L);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].residual, vec({-1}));  // e1 - 2 e1
  EXPECT_TRUE(check_algebra(LieLikeAlgebra(1, 1)).empty());
  EXPECT_EQ(is_solvable(LieLikeAlgebra(1, 1)).depth, 2u);
}

TEST(IsTrivial, Examples) {
  EXPECT_TRUE(is_trivial(leib2()));
  EXPECT_TRUE(is_trivial(LieLikeAlgebra(2, 1)));
  const auto w = is_trivial(bundle2());
  ASSERT_TRUE(w);
  ASSERT_EQ(w->base_index, 0u);
  EXPECT_EQ(w->factors, (std::vector<Scalar>{1, 2}));
  EXPECT_FALSE(is_trivial(nt3()));
}

TEST(IsTrivial, ZeroTensorsGetZeroFactor) {
  LieLikeAlgebra L(2, 3);
  L.set_structure(1, 1, 1, vec({3, 0}));
  const auto w = is_trivial(L);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->base_index, 1u);
  EXPECT_EQ(w->factors, (std::vector<Scalar>{0, 1, 0}));
}

TEST(IsTrivial, WitnessReproducesEveryBracket) {
  for (const auto& item : shared_corpus()) {
    const auto& L = item.instance.algebra;
    const auto w = is_trivial(L);
    if (!w) continue;
    for (std::size_t k = 0; k < L.s(); ++k)
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
          ASSERT_EQ(L.structure(k, i, j), w->factors[k] * L.structure(w->base_index, i, j));
  }
}

TEST(IsIdeal, Examples) {
  const auto L = leib2();
  EXPECT_TRUE(is_ideal(L, Subspace::span(2, {})));
  EXPECT_TRUE(is_ideal(L, Subspace::full(2)));
  EXPECT_TRUE(is_ideal(L, Subspace::span(2, {e(2, 0)})));
  EXPECT_FALSE(is_ideal(L, Subspace::span(2, {e(2, 1)})));
}

TEST(DerivedSeries, Examples) {
  auto ab = derived_series(LieLikeAlgebra(2, 1));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_TRUE(ab[0].is_full());
  EXPECT_TRUE(ab[1].is_zero());

  auto l = derived_series(leib2());
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[1], Subspace::span(2, {e(2, 0)}));
  EXPECT_TRUE(l[2].is_zero());

  auto t = derived_series(nt3());
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1], Subspace::span(3, {e(3, 0), e(3, 1)}));
  EXPECT_TRUE(t[2].is_zero());
}

TEST(IsSolvable, Examples) {
  EXPECT_EQ(is_solvable(LieLikeAlgebra(3, 1)).depth, 2u);
  const auto l = is_solvable(leib2());
  EXPECT_TRUE(l.solvable);
  EXPECT_EQ(l.depth, 3u);
  const auto zero = is_solvable(LieLikeAlgebra(0, 1));
  EXPECT_TRUE(zero.solvable);
  EXPECT_EQ(zero.depth, 1u);
}

TEST(IsSolvable, PerfectAlgebraIsNot) {
  // sl2 basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f
  LieLikeAlgebra L(3, 1);
  L.set_structure(0, 0, 1, vec({0, 0, 1}));
  L.set_structure(0, 1, 0, vec({0, 0, -1}));
  L.set_structure(0, 2, 0, vec({2, 0, 0}));
  L.set_structure(0, 0, 2, vec({-2, 0, 0}));
  L.set_structure(0, 2, 1, vec({0, -2, 0}));
  L.set_structure(0, 1, 2, vec({0, 2, 0}));
  ASSERT_TRUE(check_algebra(L).empty());
  EXPECT_FALSE(is_solvable(L).solvable);
  EXPECT_EQ(derived_series(L).size(), 1u);
  try {
    split_codim1(L);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotSolvable);
  }
}

TEST(SplitCodim1, Examples) {
  const auto a = split_codim1(LieLikeAlgebra(1, 1));
  EXPECT_TRUE(a.ideal.is_zero());
  EXPECT_EQ(a.x, e(1, 0));

  const auto l = split_codim1(leib2());
  EXPECT_EQ(l.ideal, Subspace::span(2, {e(2, 0)}));
  EXPECT_EQ(l.x, e(2, 1));

  const auto t = split_codim1(nt3());
  EXPECT_EQ(t.ideal, Subspace::span(3, {e(3, 0), e(3, 1)}));
  EXPECT_EQ(t.x, e(3, 2));

  EXPECT_THROW(split_codim1(LieLikeAlgebra(0, 1)), Error);
}

TEST(RestrictAlgebra, Examples) {
  EXPECT_EQ(restrict_algebra(nt3(), Subspace::span(3, {})).dim(), 0u);
  EXPECT_EQ(restrict_algebra(leib2(), Subspace::span(2, {e(2, 0)})), LieLikeAlgebra(1, 1));
  EXPECT_EQ(restrict_algebra(nt3(), Subspace::span(3, {e(3, 0), e(3, 1)})), LieLikeAlgebra(2, 2));
  try {
    restrict_algebra(leib2(), Subspace::span(2, {e(2, 1)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotClosed);
  }
}

TEST(AlgebraProperties, SubspacesContainingD2AreIdeals) {
  Gen gen(11);
  for (const auto& item : shared_corpus()) {
    const auto& L = item.instance.algebra;
    const std::size_t n = L.dim();
    const Subspace d2 = bracket_span(L, Subspace::full(n), Subspace::full(n));
    for (int trial = 0; trial < 3; ++trial) {
      const Subspace I = subspace_sum(d2, gen.subspace(n, static_cast<std::size_t>(gen.integer(0, 2)), 2));
      ASSERT_TRUE(is_ideal(L, I)) << spec_to_json(item.spec).dump();
    }
  }
}

TEST(AlgebraProperties, DerivedSeriesStrictlyDecreases) {
  for (const auto& item : shared_corpus()) {
    const auto series = derived_series(item.instance.algebra);
    for (std::size_t i = 1; i < series.size(); ++i) {
      ASSERT_LT(series[i].dim(), series[i - 1].dim());
      ASSERT_TRUE(is_subspace_of(series[i], series[i - 1]));
    }
    ASSERT_TRUE(series.back().is_zero());
  }
}

TEST(AlgebraProperties, SplitIsValid) {
  for (const auto& item : shared_corpus()) {
    const auto& L = item.instance.algebra;
    const std::size_t n = L.dim();
    const auto sp = split_codim1(L);
    ASSERT_TRUE(is_ideal(L, sp.ideal));
    ASSERT_FALSE(sp.ideal.contains(sp.x));
    ASSERT_EQ(sp.ideal.dim(), n - 1);
    ASSERT_TRUE(is_subspace_of(bracket_span(L, Subspace::full(n), Subspace::full(n)), sp.ideal));
  }
}

TEST(AlgebraProperties, RestrictionToIdealIsSolvableAndCommutesWithBracket) {
  Gen gen(5);
  for (const auto& item : shared_corpus()) {
    const auto& L = item.instance.algebra;
    const auto sp = split_codim1(L);
    const auto LA = restrict_algebra(L, sp.ideal);
    ASSERT_TRUE(check_algebra(LA).empty());
    const auto sol = is_solvable(LA);
    ASSERT_TRUE(sol.solvable);
    ASSERT_LE(sol.depth, is_solvable(L).depth);
    for (int trial = 0; trial < 2 && LA.dim() > 0; ++trial) {
      const Vector a = gen.matrix(1, LA.dim(), 2).row(0), b = gen.matrix(1, LA.dim(), 2).row(0);
      const std::size_t k = static_cast<std::size_t>(gen.integer(0, static_cast<long>(L.s()) - 1));
      const Vector inner = bracket(LA, a, b, k);
      ASSERT_EQ(sp.ideal.from_coordinates(inner),
                bracket(L, sp.ideal.from_coordinates(a), sp.ideal.from_coordinates(b), k));
    }
  }
}

TEST(AlgebraProperties, SingleBracketCheckIsLeibnizIdentity) {
  Gen gen(23);
  int valid = 0, invalid = 0;
  for (const auto& item : shared_corpus()) {
    if (item.spec.s != 1) continue;
    LieLikeAlgebra L = item.instance.algebra;
    ASSERT_TRUE(leibniz_holds(L));
    ASSERT_TRUE(check_algebra(L).empty());
    ++valid;
    if (L.dim() == 0) continue;
    // a single-entry perturbation, compared against the raw identity
    const std::size_t n = L.dim();
    const auto i = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
    const auto l = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
    Vector c = L.structure(0, i, j);
    c[l] += 1;
    L.set_structure(0, i, j, c);
    const bool raw = leibniz_holds(L);
    ASSERT_EQ(raw, check_algebra(L).empty());
    if (!raw) ++invalid;
  }
  EXPECT_GT(valid, 50);
  EXPECT_GT(invalid, 10);
}

TEST(AlgebraProperties, ChangeOfBasisPreservesValidity) {
  Gen gen(3);
  for (const auto& item : shared_corpus()) {
    const auto& L = item.instance.algebra;
    const std::size_t n = L.dim();
    Matrix Q = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) Q(i, j) = gen.integer(-1, 1);
    const auto L2 = change_basis(L, Q);
    ASSERT_TRUE(check_algebra(L2).empty());
    ASSERT_EQ(is_solvable(L2).depth, is_solvable(L).depth);
    ASSERT_EQ(change_basis(L2, inverse(Q)), L);
  }
}

TEST(DirectSum, ComponentwiseBrackets) {
  const auto S = direct_sum(leib2(), bundled_lie(1));
  ASSERT_EQ(S.dim(), 4u);
  EXPECT_TRUE(check_algebra(S).empty());
  EXPECT_EQ(bracket(S, e(4, 1), e(4, 1), 0), e(4, 0));
  EXPECT_EQ(bracket(S, e(4, 3), e(4, 2), 0), e(4, 2));
  EXPECT_EQ(bracket(S, e(4, 1), e(4, 3), 0), Vector(4));
  EXPECT_THROW(direct_sum(leib2(), nt3()), Error);
}
