#ifndef LIEALG_LINALG_HPP
#define LIEALG_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liealg/error.hpp"
#include "liealg/scalar.hpp"

namespace liealg {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& a) { return sgn(a) == 0; });
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  if (sgn(c) == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out[i] = c * v[i];
  return out;
}

/// y += c * x
inline void axpy(const Scalar& c, const Vector& x, Vector& y) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

inline Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

/// Dense row-major matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& a) { return sgn(a) == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
    return *this;
  }

  /// this += c * o
  void add_scaled(const Scalar& c, const Matrix& o) {
    check_same_shape(o);
    if (sgn(c) == 0) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (sgn(o.data_[i]) != 0) data_[i] += c * o.data_[i];
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    out.add_scaled(c, m);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Scalar& ail = a(i, l);
        if (sgn(ail) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(l, j)) != 0) out(i, j) += ail * b(l, j);
      }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (sgn(v[j]) == 0) continue;
      for (std::size_t i = 0; i < a.rows_; ++i)
        if (sgn(a(i, j)) != 0) out[i] += a(i, j) * v[j];
    }
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Block diagonal diag(a, b).
inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Reduces `m` to reduced row-echelon form in place and returns the pivot
/// columns; zero rows are dropped so that rows() == rank afterwards.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix trimmed(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) trimmed(i, j) = std::move(m(i, j));
  m = std::move(trimmed);
  return pivots;
}

inline std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy).size();
}

/// A linear subspace of Q^n held as the reduced row-echelon form of a basis.
/// The representation is canonical: equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(std::size_t n) { return from_rows(Matrix::identity(n)); }

  static Subspace span(std::size_t n, const std::vector<Vector>& vectors) {
    return from_rows(Matrix::from_rows(n, vectors));
  }

  /// Row space of `rows`.
  static Subspace from_rows(Matrix rows) {
    Subspace s(rows.cols());
    s.pivots_ = rref_in_place(rows);
    s.basis_ = std::move(rows);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Coordinates with respect to basis(); nullopt when v is not in the subspace.
  std::optional<Vector> try_coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace membership");
    Vector coords(dim());
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      coords[i] = v[pivots_[i]];
      if (sgn(coords[i]) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) rest[j] -= coords[i] * basis_(i, j);
    }
    if (!liealg::is_zero(rest)) return std::nullopt;
    return coords;
  }

  bool contains(const Vector& v) const { return try_coordinates(v).has_value(); }

  Vector coordinates(const Vector& v) const {
    auto c = try_coordinates(v);
    if (!c) throw Error(ErrorKind::NotInvariant, "vector lies outside the subspace");
    return *c;
  }

  Vector from_coordinates(const Vector& coords) const {
    if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "subspace coordinates");
    Vector v(ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (sgn(coords[i]) != 0)
        for (std::size_t j = 0; j < ambient_; ++j)
          if (sgn(basis_(i, j)) != 0) v[j] += coords[i] * basis_(i, j);
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
inline Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

inline bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum");
  auto vs = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vs.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), vs);
}

/// Rows whose common kernel is exactly `a`.
inline Matrix annihilator_rows(const Subspace& a) { return kernel(a.basis()).basis(); }

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace intersection");
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  const Matrix ca = annihilator_rows(a), cb = annihilator_rows(b);
  Matrix stacked(ca.rows() + cb.rows(), a.ambient_dim());
  for (std::size_t i = 0; i < ca.rows(); ++i)
    for (std::size_t j = 0; j < ca.cols(); ++j) stacked(i, j) = ca(i, j);
  for (std::size_t i = 0; i < cb.rows(); ++i)
    for (std::size_t j = 0; j < cb.cols(); ++j) stacked(ca.rows() + i, j) = cb(i, j);
  return kernel(stacked);
}

inline bool is_subspace_of(const Subspace& a, const Subspace& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis_vector(i))) return false;
  return true;
}

/// M(S)
inline Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> imgs;
  for (std::size_t i = 0; i < s.dim(); ++i) imgs.push_back(m * s.basis_vector(i));
  return Subspace::span(m.rows(), imgs);
}

inline bool maps_into(const Matrix& m, const Subspace& from, const Subspace& to) {
  for (std::size_t i = 0; i < from.dim(); ++i)
    if (!to.contains(m * from.basis_vector(i))) return false;
  return true;
}

/// Intersection of the kernels of several equally wide matrices, computed as
/// the kernel of their vertical stack.
inline Subspace common_kernel(std::size_t n, const std::vector<Matrix>& ms) {
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "common kernel");
    rows += m.rows();
  }
  Matrix stacked(rows, n);
  std::size_t r = 0;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i, ++r)
      for (std::size_t j = 0; j < n; ++j) stacked(r, j) = m(i, j);
  return kernel(stacked);
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw Error(ErrorKind::Singular, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Matrix shifted(const Matrix& m, const Scalar& lambda) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= lambda;
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials and rational spectra.

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Integer>;

/// det(tI - N) for an integer matrix by division-free (Berkowitz-style)
/// expansion over leading principal submatrices:
///   p_{r+1}(t) = (t - a) p_r(t) - sum_k t^k sum_{j>k} c_j R A^{j-k-1} C.
inline IntPoly integer_char_poly(const std::vector<std::vector<Integer>>& n_mat) {
  const std::size_t n = n_mat.size();
  IntPoly p{1};
  for (std::size_t r = 0; r < n; ++r) {
    const Integer& a = n_mat[r][r];
    // m_i = R A_r^i C for i < r
    std::vector<Integer> m(r);
    std::vector<Integer> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = n_mat[i][r];
    for (std::size_t step = 0; step < r; ++step) {
      Integer acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += n_mat[r][i] * w[i];
      m[step] = acc;
      if (step + 1 == r) break;
      std::vector<Integer> nw(r);
      for (std::size_t i = 0; i < r; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (sgn(w[j]) != 0) s += n_mat[i][j] * w[j];
        nw[i] = s;
      }
      w = std::move(nw);
    }
    IntPoly next(r + 2);
    for (std::size_t i = 0; i <= r; ++i) {
      next[i + 1] += p[i];
      next[i] -= a * p[i];
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer s = 0;
      for (std::size_t j = k + 1; j <= r; ++j) s += p[j] * m[j - k - 1];
      next[k] -= s;
    }
    p = std::move(next);
  }
  return p;
}

/// Least common denominator of all entries.
inline Integer common_denominator(const Matrix& m) {
  Integer d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& q = m(i, j).get_den();
      if (q != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    }
  return d;
}

/// det(tI - M), monic, coefficients from the constant term upwards.
inline std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  const Integer d = common_denominator(m);
  std::vector<std::vector<Integer>> scaled(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled[i][j] = Integer(m(i, j) * d);
  const IntPoly p = integer_char_poly(scaled);
  // p_M(t) = d^{-n} p_N(d t)
  std::vector<Scalar> out(n + 1);
  Integer dpow = 1;
  std::vector<Integer> powers(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    powers[i] = dpow;
    dpow *= d;
  }
  for (std::size_t i = 0; i <= n; ++i) out[i] = Scalar(p[i]) / Scalar(powers[n - i]);
  return out;
}

inline Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& t) {
  Scalar acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * t + poly[i];
  return acc;
}

struct Eigenvalue {
  Scalar value;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;  // ascending
  bool fully_rational = false;
};

namespace detail {

inline Integer eval_int(const IntPoly& q, const Integer& t) {
  Integer acc = 0;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * t + q[i];
  return acc;
}

/// Divides monic q by (t - r); the caller guarantees r is a root.
inline IntPoly deflate(const IntPoly& q, const Integer& r) {
  const std::size_t deg = q.size() - 1;
  IntPoly out(deg);
  Integer carry = q[deg];
  for (std::size_t i = deg; i-- > 0;) {
    out[i] = carry;
    carry = q[i] + r * carry;
  }
  return out;
}

/// Integer roots (with multiplicity) of a monic integer polynomial. By the
/// rational-root theorem every rational root of a monic integer polynomial is
/// an integer dividing the constant term; candidates are limited by the
/// Fujiwara bound 2 max |q_{deg-i}|^{1/i}.
inline std::vector<std::pair<Integer, std::size_t>> monic_integer_roots(IntPoly q) {
  std::vector<std::pair<Integer, std::size_t>> roots;
  std::size_t zero_mult = 0;
  while (q.size() > 1 && sgn(q[0]) == 0) {
    q.erase(q.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Integer(0), zero_mult);
  if (q.size() <= 1) return roots;

  Integer bound = 0;
  const std::size_t deg = q.size() - 1;
  for (std::size_t i = 1; i <= deg; ++i) {
    Integer a = abs(q[deg - i]);
    Integer root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
    root += 1;
    if (root > bound) bound = root;
  }
  bound *= 2;

  for (Integer r = 1; r <= bound && q.size() > 1; ++r) {
    if (r > abs(q[0])) break;
    if (!mpz_divisible_p(q[0].get_mpz_t(), r.get_mpz_t())) continue;
    for (const Integer& cand : {Integer(-r), r}) {
      std::size_t mult = 0;
      while (q.size() > 1 && sgn(eval_int(q, cand)) == 0) {
        q = deflate(q, cand);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(cand, mult);
    }
  }
  return roots;
}

}  // namespace detail

/// Rational roots of the characteristic polynomial, ascending, with algebraic
/// multiplicities. `fully_rational` is set when the multiplicities sum to the
/// matrix size.
inline Spectrum rational_eigenvalues(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "eigenvalues of non-square matrix");
  const std::size_t n = m.rows();
  const Integer d = common_denominator(m);
  std::vector<std::vector<Integer>> scaled(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled[i][j] = Integer(m(i, j) * d);
  const auto roots = detail::monic_integer_roots(integer_char_poly(scaled));
  Spectrum spec;
  std::size_t total = 0;
  for (const auto& [r, mult] : roots) {
    spec.eigenvalues.push_back({Scalar(r) / Scalar(d), mult});
    total += mult;
  }
  for (auto& e : spec.eigenvalues) e.value.canonicalize();
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  spec.fully_rational = total == n;
  return spec;
}

inline Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "eigenspace of non-square matrix");
  return kernel(shifted(m, lambda));
}

/// Matrix of M|S in the canonical basis of S: M b_j = sum_i R(i, j) b_i.
inline Matrix restrict_operator(const Matrix& m, const Subspace& s) {
  if (!m.is_square() || m.rows() != s.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "operator restriction");
  Matrix r(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto coords = s.try_coordinates(m * s.basis_vector(j));
    if (!coords) throw Error(ErrorKind::NotInvariant, "subspace is not invariant under the operator");
    for (std::size_t i = 0; i < s.dim(); ++i) r(i, j) = std::move((*coords)[i]);
  }
  return r;
}

struct JointEigen {
  Vector vector;
  std::vector<Scalar> eigenvalues;
};

/// Common eigenvector of `family` inside the invariant subspace `within`.
///
/// Operators are refined in the given order; for each one its rational
/// eigenvalues on `within` are tried in ascending order and the running
/// subspace is intersected with the eigenspace, backtracking when the
/// intersection becomes zero. The returned vector is the first canonical
/// basis vector of the surviving joint eigenspace. Pairwise commutation is
/// not assumed: the search succeeds whenever a joint eigenvector with
/// rational eigenvalues exists.
inline JointEigen joint_eigenvector(std::span<const Matrix> family, const Subspace& within) {
  if (within.is_zero()) throw Error(ErrorKind::EmptySubspace, "joint eigenvector of a zero subspace");
  const std::size_t d = within.dim();
  std::vector<Matrix> restricted;
  std::vector<Spectrum> spectra;
  restricted.reserve(family.size());
  for (const auto& op : family) {
    restricted.push_back(restrict_operator(op, within));
    spectra.push_back(rational_eigenvalues(restricted.back()));
  }

  std::vector<Scalar> chosen(family.size());
  std::function<std::optional<Subspace>(std::size_t, const Subspace&)> search =
      [&](std::size_t i, const Subspace& current) -> std::optional<Subspace> {
    if (i == family.size()) return current;
    for (const auto& e : spectra[i].eigenvalues) {
      Subspace next = subspace_intersect(current, eigenspace(restricted[i], e.value));
      if (next.is_zero()) continue;
      chosen[i] = e.value;
      if (auto found = search(i + 1, next)) return found;
    }
    return std::nullopt;
  };

  auto found = search(0, Subspace::full(d));
  if (!found) {
    for (const auto& sp : spectra)
      if (!sp.fully_rational) throw Error(ErrorKind::NonSplitSpectrum, "operator has irrational eigenvalues");
    throw Error(ErrorKind::NoCommonEigenvector, "family has no common eigenvector");
  }
  std::vector<Vector> ambient;
  for (std::size_t i = 0; i < found->dim(); ++i) ambient.push_back(within.from_coordinates(found->basis_vector(i)));
  Subspace joint = Subspace::span(within.ambient_dim(), ambient);
  return {joint.basis_vector(0), chosen};
}

inline JointEigen joint_eigenvector(const std::vector<Matrix>& family, const Subspace& within) {
  return joint_eigenvector(std::span<const Matrix>(family), within);
}

}  // namespace liealg

#endif
