#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works on arbitrary-precision values (GMP). Matrices are
// dense and row-major; desk-scale sizes (tens of rows) are the target, so no
// modular or sparse tricks are used. Hermite forms are row-style throughout:
// U * M = H with H upper-staircase.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Machine-word Z^d degree vector, used on hot paths (Hilbert functions,
/// semigroup enumeration). Desk-scale degrees never approach the limits.
using Degree = std::vector<long long>;

Degree to_degree(const IntVector& v);
IntVector to_integer_vector(const Degree& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  /// Columns `indices` (in the given order) as a new matrix.
  IntMatrix select_columns(const std::vector<std::size_t>& indices) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular transform, u * m == h
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style HNF: pivots positive, entries above a pivot reduced into
/// [0, pivot), zero rows at the bottom.
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix s;  // diagonal, d_1 | d_2 | ...
  IntMatrix u;
  IntMatrix v;  // u * m * v == s
  std::size_t rank = 0;
  IntVector elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of a sublattice of Z^ambient_dim. `saturated` records whether the
/// lattice equals its rational span intersected with Z^ambient_dim.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;
  bool saturated = true;

  std::size_t rank() const { return vectors.size(); }
  IntMatrix as_rows() const { return IntMatrix::from_rows(vectors, ambient_dim); }
};

/// Saturated basis of {u in Z^n : a * u = 0}.
LatticeBasis lattice_kernel(const IntMatrix& a);

/// Saturation of the lattice spanned by the given vectors:
/// Q-span(vectors) intersected with Z^dim, returned as a row-style HNF basis.
LatticeBasis saturate_lattice(const std::vector<IntVector>& vectors, std::size_t dim);

/// Row-style HNF basis of the lattice spanned by the given vectors (not saturated).
LatticeBasis lattice_span(const std::vector<IntVector>& vectors, std::size_t dim);

/// Membership of v in the lattice whose basis is in row-style HNF.
bool lattice_contains(const LatticeBasis& hnf_basis, const IntVector& v);

/// Canonical representative of v modulo a lattice given by an HNF basis:
/// each pivot coordinate lands in [0, pivot).
IntVector reduce_modulo_lattice(const LatticeBasis& hnf_basis, const IntVector& v);

/// Index [Z^d : Z-span(columns)] for a rank-d matrix; 0 if rank < d.
Integer lattice_index(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector

// ---- rational helpers ----

using RatMatrix = std::vector<RatVector>;  // row-major, rows are vectors

RatMatrix to_rational(const IntMatrix& m);
std::size_t rational_rank(RatMatrix m);
/// Basis of {x : m x = 0}; each basis vector scaled to a primitive integer vector.
std::vector<IntVector> rational_nullspace(const RatMatrix& m, std::size_t cols);
/// Solves m x = b; returns false when inconsistent. One particular solution.
bool rational_solve(const RatMatrix& m, const RatVector& b, std::size_t cols, RatVector& x);
/// Sign of the determinant of a square rational matrix.
int determinant_sign(RatMatrix m);
/// Clears denominators and divides by the content.
IntVector primitive_integer_vector(const RatVector& v);

}  // namespace gkz
