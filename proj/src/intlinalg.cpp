#include "gkz/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gkz {

Degree to_degree(const IntVector& v) {
  Degree out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw std::overflow_error("degree coordinate exceeds machine range");
    out[i] = v[i].get_si();
  }
  return out;
}

IntVector to_integer_vector(const Degree& v) {
  IntVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < indices.size(); ++k) m(r, k) = (*this)(r, indices[k]);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVector out(a.rows_, Integer(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// row_dst -= q * row_src, applied to both the working matrix and its transform.
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (sgn(q) == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows());
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q = trunc_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (sgn(h(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntVector SmithForm::elementary_divisors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(s(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  out.s = m;
  out.u = IntMatrix::identity(m.rows());
  out.v = IntMatrix::identity(m.cols());
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t lim = std::min(s.rows(), s.cols());
  std::size_t t = 0;
  for (; t < lim; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = s.rows(), pc = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (sgn(s(i, j)) == 0) continue;
        if (pr == s.rows() || abs(s(i, j)) < abs(s(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr == s.rows()) break;
    s.swap_rows(t, pr);
    u.swap_rows(t, pr);
    s.swap_columns(t, pc);
    v.swap_columns(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (sgn(s(i, t)) == 0) continue;
        Integer q = trunc_div(s(i, t), s(t, t));
        row_axpy(s, i, t, q);
        row_axpy(u, i, t, q);
        if (sgn(s(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (sgn(s(t, j)) == 0) continue;
        Integer q = trunc_div(s(t, j), s(t, t));
        col_axpy(s, j, t, q);
        col_axpy(v, j, t, q);
        if (sgn(s(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t to the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < s.rows(); ++i)
          if (sgn(s(i, t)) != 0 && abs(s(i, t)) < abs(s(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (sgn(s(t, j)) != 0 && abs(s(t, j)) < abs(s(bi, bj))) {
            bi = t;
            bj = j;
          }
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_columns(t, bj);
        v.swap_columns(t, bj);
        continue;
      }
      // divisibility chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), s(i, j).get_mpz_t(), s(t, t).get_mpz_t());
          if (sgn(r) != 0) {
            row_axpy(s, t, i, Integer(-1));
            row_axpy(u, t, i, Integer(-1));
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (sgn(s(t, t)) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  out.rank = t;
  return out;
}

LatticeBasis lattice_span(const std::vector<IntVector>& vectors, std::size_t dim) {
  LatticeBasis out;
  out.ambient_dim = dim;
  if (vectors.empty()) return out;
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(vectors, dim));
  for (std::size_t r = 0; r < hf.rank; ++r) out.vectors.push_back(hf.h.row(r));
  out.saturated = false;
  return out;
}

LatticeBasis lattice_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm hf = hermite_normal_form(a.transpose());
  std::vector<IntVector> kernel;
  for (std::size_t r = hf.rank; r < n; ++r) kernel.push_back(hf.u.row(r));
  LatticeBasis out = lattice_span(kernel, n);
  out.saturated = true;  // rows of a unimodular transform span a saturated lattice
  return out;
}

LatticeBasis saturate_lattice(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (vectors.empty()) {
    LatticeBasis out;
    out.ambient_dim = dim;
    return out;
  }
  // Q-span intersected with Z^dim is the integer kernel of the orthogonal complement.
  std::vector<IntVector> normals = rational_nullspace(to_rational(IntMatrix::from_rows(vectors, dim)), dim);
  if (normals.empty()) {
    LatticeBasis out;
    out.ambient_dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVector e(dim, Integer(0));
      e[i] = 1;
      out.vectors.push_back(e);
    }
    return out;
  }
  return lattice_kernel(IntMatrix::from_rows(normals, dim));
}

bool lattice_contains(const LatticeBasis& hnf_basis, const IntVector& v) {
  IntVector w = v;
  for (const IntVector& row : hnf_basis.vectors) {
    std::size_t pc = 0;
    while (pc < row.size() && sgn(row[pc]) == 0) ++pc;
    for (std::size_t c = 0; c < pc; ++c)
      if (sgn(w[c]) != 0) return false;
    Integer r;
    mpz_tdiv_r(r.get_mpz_t(), w[pc].get_mpz_t(), row[pc].get_mpz_t());
    if (sgn(r) != 0) return false;
    Integer q = w[pc] / row[pc];
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= q * row[c];
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector reduce_modulo_lattice(const LatticeBasis& hnf_basis, const IntVector& v) {
  IntVector w = v;
  for (const IntVector& row : hnf_basis.vectors) {
    std::size_t pc = 0;
    while (pc < row.size() && sgn(row[pc]) == 0) ++pc;
    if (pc == row.size()) continue;
    Integer q = floor_div(w[pc], row[pc]);
    for (std::size_t c = 0; c < w.size(); ++c) w[c] -= q * row[c];
  }
  return w;
}

Integer lattice_index(const IntMatrix& m) {
  SmithForm sf = smith_normal_form(m);
  if (sf.rank < m.rows()) return Integer(0);
  Integer idx = 1;
  for (const Integer& d : sf.elementary_divisors()) idx *= d;
  return idx;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact (Bareiss)
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), RatVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(RatMatrix m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

IntVector primitive_integer_vector(const RatVector& v) {
  Integer l = 1;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  Integer g = content(out);
  if (sgn(g) != 0 && g != 1)
    for (Integer& x : out) x /= g;
  return out;
}

std::vector<IntVector> rational_nullspace(const RatMatrix& m, std::size_t cols) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][f];
    basis.push_back(primitive_integer_vector(x));
  }
  return basis;
}

bool rational_solve(const RatMatrix& m, const RatVector& b, std::size_t cols, RatVector& x) {
  RatMatrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return false;
  x.assign(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return true;
}

int determinant_sign(RatMatrix m) {
  const std::size_t n = m.size();
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    if (sgn(m[c][c]) < 0) sign = -sign;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return sign;
}

}  // namespace gkz
