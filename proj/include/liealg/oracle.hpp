#ifndef LIEALG_ORACLE_HPP
#define LIEALG_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liealg/weight.hpp"

namespace liealg {

struct OracleEntry {
  Subspace space;
  Weight weight;
};

/// Every nonzero joint weight space of the family f_k(e_i), g_k(e_i), found
/// by intersecting eigenspaces operator by operator (all F first, then all G).
/// Independent of the solver: no recursion over ideals, no annihilator.
inline std::vector<OracleEntry> oracle_solve(const LieLikeAlgebra& L, const OrdinaryModule& M) {
  if (!(M.algebra() == L)) throw Error(ErrorKind::AlgebraMismatch, "module is defined over a different algebra");
  const std::size_t s = M.s(), n = M.n(), m = M.vdim();
  const std::size_t count = s * n;

  std::vector<const Matrix*> ops;
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) ops.push_back(&M.F(k, i));
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) ops.push_back(&M.G(k, i));

  bool split = true;
  std::vector<std::vector<std::pair<Scalar, Subspace>>> eigen(ops.size());
  for (std::size_t o = 0; o < ops.size(); ++o) {
    const Spectrum sp = rational_eigenvalues(*ops[o]);
    split = split && sp.fully_rational;
    for (const auto& ev : sp.eigenvalues) eigen[o].emplace_back(ev.value, eigenspace(*ops[o], ev.value));
  }

  std::vector<OracleEntry> out;
  std::vector<Scalar> values(ops.size());
  auto dfs = [&](auto&& self, std::size_t o, const Subspace& current) -> void {
    if (o == ops.size()) {
      Weight w(s, n);
      for (std::size_t t = 0; t < count; ++t) {
        w.phi(t / n, t % n) = values[t];
        w.psi(t / n, t % n) = values[count + t];
      }
      out.push_back({current, std::move(w)});
      return;
    }
    for (const auto& [value, space] : eigen[o]) {
      Subspace next = subspace_intersect(current, space);
      if (next.is_zero()) continue;
      values[o] = value;
      self(self, o + 1, next);
    }
  };
  dfs(dfs, 0, Subspace::full(m));
  if (out.empty() && !split) throw Error(ErrorKind::NonSplitSpectrum, "no rational joint weight and some operator has irrational eigenvalues");
  return out;
}

/// Index of the oracle entry whose weight equals `w` and whose space holds v.
inline std::optional<std::size_t> oracle_match(const std::vector<OracleEntry>& entries, const Vector& v,
                                               const Weight& w) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].weight == w && entries[i].space.contains(v)) return i;
  return std::nullopt;
}

}  // namespace liealg

#endif
