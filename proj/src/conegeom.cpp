#include "gkz/conegeom.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <set>

namespace gkz {

namespace {

long long to_ll(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("value exceeds machine range");
  return x.get_si();
}

long long dot_small(const IntVector& a, const Degree& b) {
  long long s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += to_ll(a[i]) * b[i];
  return s;
}

struct Facet {
  std::vector<std::size_t> columns;
  IntVector normal;
};

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facets of the cone over the columns of a rank-d matrix, by exact dual
// description: every facet normal is orthogonal to d-1 independent columns.
std::vector<Facet> cone_facets(const IntMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  std::vector<Facet> facets;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix rows;
    for (std::size_t j : subset) {
      RatVector r(d);
      for (std::size_t i = 0; i < d; ++i) r[i] = m(i, j);
      rows.push_back(r);
    }
    std::vector<IntVector> ns = rational_nullspace(rows, d);
    if (ns.size() != 1) return;
    IntVector phi = ns.front();
    int sign = 0;
    bool mixed = false;
    std::vector<std::size_t> zero;
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = dot(phi, m.column(j));
      int sg = sgn(s);
      if (sg == 0) {
        zero.push_back(j);
      } else if (sign == 0) {
        sign = sg;
      } else if (sg != sign) {
        mixed = true;
      }
    }
    if (mixed || sign == 0) return;
    if (sign < 0)
      for (Integer& x : phi) x = -x;
    if (seen.insert(zero).second) facets.push_back({zero, phi});
  });
  return facets;
}

std::optional<IntVector> find_nonnegative_kernel_vector(const IntMatrix& m) {
  const std::size_t n = m.cols();
  for (std::size_t j = 0; j < n; ++j) {
    if (m.column(j) == IntVector(m.rows(), Integer(0))) {
      IntVector u(n, Integer(0));
      u[j] = 1;
      return u;
    }
  }
  // bounded search over small total multiplicity
  IntVector u(n, Integer(0));
  std::optional<IntVector> found;
  std::function<bool(std::size_t, long)> rec = [&](std::size_t k, long left) -> bool {
    if (k == n) {
      if (std::all_of(u.begin(), u.end(), [](const Integer& x) { return sgn(x) == 0; })) return false;
      if ((m * u) == IntVector(m.rows(), Integer(0))) {
        found = u;
        return true;
      }
      return false;
    }
    for (long x = 0; x <= left; ++x) {
      u[k] = x;
      if (rec(k + 1, left - x)) return true;
    }
    u[k] = 0;
    return false;
  };
  for (long total = 2; total <= 12 && !found; ++total) rec(0, total);
  return found;
}

}  // namespace

PointedMatrix::PointedMatrix(IntMatrix matrix, IntVector certificate)
    : matrix_(std::move(matrix)), certificate_(std::move(certificate)) {
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    columns_.push_back(to_degree(matrix_.column(j)));
    heights_.push_back(dot_small(certificate_, columns_.back()));
  }
}

long long PointedMatrix::height(const Degree& v) const { return dot_small(certificate_, v); }

bool PointedMatrix::verify_certificate() const {
  if (certificate_.size() != d()) return false;
  for (std::size_t j = 0; j < n(); ++j)
    if (sgn(dot(certificate_, matrix_.column(j))) <= 0) return false;
  return true;
}

PointedMatrix make_pointed_matrix(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw NotFullRank("matrix must have at least one row and column");
  if (rank(m) < m.rows()) throw NotFullRank("matrix rank is below its number of rows");
  std::vector<Facet> facets = cone_facets(m);
  IntVector h(m.rows(), Integer(0));
  for (const Facet& f : facets)
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += f.normal[i];
  bool ok = !facets.empty();
  for (std::size_t j = 0; ok && j < m.cols(); ++j)
    if (sgn(dot(h, m.column(j))) <= 0) ok = false;
  if (!ok) throw NotPointed("columns do not lie in an open half-space", find_nonnegative_kernel_vector(m));
  Integer g = content(h);
  for (Integer& x : h) x /= g;
  return PointedMatrix(m, h);
}

bool Face::contains(std::size_t j) const { return std::binary_search(columns.begin(), columns.end(), j); }

bool Face::is_subface_of(const Face& other) const {
  return std::includes(other.columns.begin(), other.columns.end(), columns.begin(), columns.end());
}

std::size_t FaceLattice::find(const std::vector<std::size_t>& columns) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].columns == columns) return i;
  return faces.size();
}

FaceLattice face_lattice(const PointedMatrix& a) {
  const IntMatrix& m = a.matrix();
  const std::size_t n = a.n();
  std::vector<Facet> facets = cone_facets(m);

  std::set<std::vector<std::size_t>> sets;
  std::vector<std::size_t> all(n);
  for (std::size_t j = 0; j < n; ++j) all[j] = j;
  sets.insert(all);
  std::vector<std::vector<std::size_t>> frontier;
  for (const Facet& f : facets)
    if (sets.insert(f.columns).second) frontier.push_back(f.columns);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& g : frontier)
      for (const Facet& f : facets) {
        std::vector<std::size_t> inter;
        std::set_intersection(g.begin(), g.end(), f.columns.begin(), f.columns.end(), std::back_inserter(inter));
        if (sets.insert(inter).second) next.push_back(inter);
      }
    frontier = std::move(next);
  }

  FaceLattice out;
  for (const auto& cols : sets) {
    Face face;
    face.columns = cols;
    face.dimension = cols.empty() ? 0 : rank(m.select_columns(cols));
    if (cols.size() == n) {
      face.functional.assign(a.d(), Integer(0));
    } else if (cols.empty()) {
      face.functional = a.certificate();
    } else {
      face.functional.assign(a.d(), Integer(0));
      for (const Facet& f : facets)
        if (std::includes(f.columns.begin(), f.columns.end(), cols.begin(), cols.end()))
          for (std::size_t i = 0; i < a.d(); ++i) face.functional[i] += f.normal[i];
      Integer g = content(face.functional);
      for (Integer& x : face.functional) x /= g;
    }
    out.faces.push_back(std::move(face));
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const Face& x, const Face& y) {
    if (x.dimension != y.dimension) return x.dimension < y.dimension;
    if (x.columns.size() != y.columns.size()) return x.columns.size() < y.columns.size();
    return x.columns < y.columns;
  });
  for (std::size_t i = 0; i < out.faces.size(); ++i)
    for (std::size_t j = 0; j < out.faces.size(); ++j)
      if (i != j && out.faces[i].is_subface_of(out.faces[j])) out.containment.emplace_back(i, j);
  return out;
}

bool verify_face(const PointedMatrix& a, const Face& f) {
  for (std::size_t j = 0; j < a.n(); ++j) {
    int s = sgn(dot(f.functional, a.column(j)));
    if (f.contains(j) ? s != 0 : s <= 0) return false;
  }
  std::size_t dim = f.columns.empty() ? 0 : rank(a.matrix().select_columns(f.columns));
  return dim == f.dimension;
}

// ---- volume ----

namespace {

Integer simplex_det(const std::vector<IntVector>& pts, const std::vector<std::size_t>& simplex) {
  const std::size_t d = pts.front().size();
  IntMatrix m(d, d);
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t i = 0; i < d; ++i) m(i, k - 1) = pts[simplex[k]][i] - pts[simplex[0]][i];
  return determinant(m);
}

// Sign of det[f_1 - f_0, ..., f_{d-1} - f_0, x - f_0].
int side(const std::vector<IntVector>& pts, const std::vector<std::size_t>& facet, const IntVector& x) {
  const std::size_t d = x.size();
  IntMatrix m(d, d);
  for (std::size_t k = 1; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) m(i, k - 1) = pts[facet[k]][i] - pts[facet[0]][i];
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = x[i] - pts[facet[0]][i];
  return sgn(determinant(m));
}

}  // namespace

Integer normalized_volume(const PointedMatrix& a, Placement order) {
  const std::size_t d = a.d();
  std::vector<IntVector> pts;
  pts.push_back(IntVector(d, Integer(0)));
  for (std::size_t j = 0; j < a.n(); ++j) pts.push_back(a.column(j));
  std::vector<std::size_t> sequence(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) sequence[i] = i;
  if (order == Placement::kReverse) std::reverse(sequence.begin(), sequence.end());

  // initial simplex: first affinely independent points in placement order
  std::vector<std::size_t> initial;
  std::vector<IntVector> diffs;
  for (std::size_t idx : sequence) {
    if (initial.size() == d + 1) break;
    if (initial.empty()) {
      initial.push_back(idx);
      continue;
    }
    std::vector<IntVector> trial = diffs;
    IntVector diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = pts[idx][i] - pts[initial[0]][i];
    trial.push_back(diff);
    if (rank(IntMatrix::from_rows(trial, d)) == trial.size()) {
      diffs = std::move(trial);
      initial.push_back(idx);
    }
  }
  if (initial.size() != d + 1) return Integer(0);

  std::vector<std::vector<std::size_t>> simplices{initial};
  std::set<std::size_t> used(initial.begin(), initial.end());
  for (std::size_t idx : sequence) {
    if (used.count(idx)) continue;
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facet_count;  // facet -> (count, opposite)
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop <= d; ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k <= d; ++k)
          if (k != drop) f.push_back(s[k]);
        std::sort(f.begin(), f.end());
        auto& entry = facet_count[f];
        entry.first += 1;
        entry.second = s[drop];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, entry] : facet_count) {
      if (entry.first != 1) continue;
      int inner = side(pts, f, pts[entry.second]);
      int outer = side(pts, f, pts[idx]);
      if (outer != 0 && outer != inner) {
        std::vector<std::size_t> s = f;
        s.push_back(idx);
        added.push_back(std::move(s));
      }
    }
    for (auto& s : added) simplices.push_back(std::move(s));
    used.insert(idx);
  }
  Integer total = 0;
  for (const auto& s : simplices) total += abs(simplex_det(pts, s));
  return total;
}

// ---- fibers and membership ----

FiberEnumerator::FiberEnumerator(std::vector<Degree> columns, std::vector<long long> weights)
    : columns_(std::move(columns)), weights_(std::move(weights)) {
  for (long long w : weights_)
    if (w <= 0) throw std::invalid_argument("fiber weights must be positive");
  rows_ = columns_.empty() ? 0 : columns_.front().size();
  // greedy pivot columns, in index order
  RatMatrix chosen;  // as rows
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    RatVector col;
    for (long long x : columns_[j]) col.emplace_back(static_cast<long>(x));
    RatMatrix trial = chosen;
    trial.push_back(col);
    if (rational_rank(trial) == trial.size()) {
      chosen = std::move(trial);
      pivots_.push_back(j);
    } else {
      free_.push_back(j);
    }
  }
  const std::size_t r = pivots_.size();
  if (r == 0) return;
  // independent rows of the pivot block
  RatMatrix rows_chosen;
  for (std::size_t i = 0; i < rows_; ++i) {
    RatVector row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = static_cast<long>(columns_[pivots_[k]][i]);
    RatMatrix trial = rows_chosen;
    trial.push_back(row);
    if (rational_rank(trial) == trial.size()) {
      rows_chosen = std::move(trial);
      pivot_rows_.push_back(i);
    }
    if (pivot_rows_.size() == r) break;
  }
  IntMatrix block(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) block(a, b) = static_cast<long>(columns_[pivots_[b]][pivot_rows_[a]]);
  Integer det = determinant(block);
  det_ = to_ll(det);
  adjugate_.assign(r, std::vector<long long>(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      // adj(a, b) = (-1)^{a+b} * minor(b, a)
      IntMatrix minor(r - 1, r - 1);
      for (std::size_t i = 0, mi = 0; i < r; ++i) {
        if (i == b) continue;
        for (std::size_t j = 0, mj = 0; j < r; ++j) {
          if (j == a) continue;
          minor(mi, mj++) = block(i, j);
        }
        ++mi;
      }
      Integer c = r == 1 ? Integer(1) : determinant(minor);
      if ((a + b) % 2) c = -c;
      adjugate_[a][b] = to_ll(c);
    }
}

bool FiberEnumerator::solve_pivots(std::vector<long long>& u, const Degree& target) const {
  const std::size_t r = pivots_.size();
  Degree rest = target;
  for (std::size_t j : free_)
    if (u[j] != 0)
      for (std::size_t i = 0; i < rows_; ++i) rest[i] -= columns_[j][i] * u[j];
  for (std::size_t a = 0; a < r; ++a) {
    long long s = 0;
    for (std::size_t b = 0; b < r; ++b) s += adjugate_[a][b] * rest[pivot_rows_[b]];
    if (s % det_ != 0) return false;
    long long x = s / det_;
    if (x < 0) return false;
    u[pivots_[a]] = x;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    long long s = 0;
    for (std::size_t a = 0; a < r; ++a) s += columns_[pivots_[a]][i] * u[pivots_[a]];
    if (s != rest[i]) return false;
  }
  return true;
}

Membership semigroup_member(const PointedMatrix& a, const IntVector& v) {
  Membership out;
  std::vector<Degree> cols;
  for (std::size_t j = 0; j < a.n(); ++j) cols.push_back(a.column_degree(j));
  FiberEnumerator fe(cols, a.column_heights());
  Degree target = to_degree(v);
  fe.for_each(target, a.height(target), [&](const std::vector<long long>& u) {
    out.member = true;
    out.witness = to_integer_vector(u);
    return false;
  });
  return out;
}

bool localized_member(const PointedMatrix& a, const Face& f, const IntVector& vin) {
  const std::size_t d = a.d();
  const Degree v = to_degree(vin);
  std::vector<IntVector> face_cols;
  std::vector<Degree> outside;
  for (std::size_t j = 0; j < a.n(); ++j) {
    if (f.contains(j))
      face_cols.push_back(a.column(j));
    else
      outside.push_back(a.column_degree(j));
  }
  LatticeBasis face_span = lattice_span(face_cols, d);
  if (outside.empty()) return lattice_contains(face_span, vin);
  const Degree functional = to_degree(f.functional);
  long long total = 0;
  for (std::size_t i = 0; i < d; ++i) total += functional[i] * v[i];
  if (total < 0) return false;
  // project along Q F: coordinates are the normals of the face span
  std::vector<Degree> normals;
  if (face_cols.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      Degree e(d, 0);
      e[i] = 1;
      normals.push_back(e);
    }
  } else {
    RatMatrix rows;
    for (const IntVector& c : face_cols) rows.emplace_back(c.begin(), c.end());
    for (const IntVector& nrm : rational_nullspace(rows, d)) normals.push_back(to_degree(nrm));
  }
  auto project = [&](const Degree& x) {
    Degree p(normals.size(), 0);
    for (std::size_t k = 0; k < normals.size(); ++k)
      for (std::size_t i = 0; i < d; ++i) p[k] += normals[k][i] * x[i];
    return p;
  };
  std::vector<Degree> projected;
  std::vector<long long> weights;
  for (const Degree& c : outside) {
    projected.push_back(project(c));
    long long w = 0;
    for (std::size_t i = 0; i < d; ++i) w += functional[i] * c[i];
    weights.push_back(w);
  }
  FiberEnumerator fibers(projected, weights);
  bool found = false;
  fibers.for_each(project(v), total, [&](const std::vector<long long>& u) {
    IntVector rest = vin;
    for (std::size_t j = 0; j < outside.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) rest[i] -= static_cast<long>(outside[j][i] * u[j]);
    if (lattice_contains(face_span, rest)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

LocalizedMembership::LocalizedMembership(const PointedMatrix& a, const Face& f)
    : d_(a.d()), functional_(to_degree(f.functional)) {
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < a.n(); ++j)
    if (!f.contains(j)) outside.push_back(j);
  full_ = outside.empty();
  IntMatrix u = IntMatrix::identity(d_);
  moduli_.assign(d_, 0);
  if (!f.columns.empty()) {
    SmithForm sf = smith_normal_form(a.matrix().select_columns(f.columns));
    u = sf.u;
    for (std::size_t i = 0; i < sf.rank; ++i) moduli_[i] = to_ll(sf.s(i, i));
  }
  for (std::size_t r = 0; r < d_; ++r) u_.push_back(to_degree(u.row(r)));
  for (std::size_t j : outside) {
    gen_keys_.push_back(key(a.column_degree(j)));
    const Degree c = a.column_degree(j);
    long long w = 0;
    for (std::size_t i = 0; i < d_; ++i) w += functional_[i] * c[i];
    gen_weights_.push_back(w);
  }
  std::string zero = key(Degree(d_, 0));
  levels_.push_back({zero});
  seen_.insert(zero);
}

std::string LocalizedMembership::key(const Degree& v) const {
  std::string out;
  for (std::size_t r = 0; r < d_; ++r) {
    if (moduli_[r] == 1) continue;
    long long y = 0;
    for (std::size_t i = 0; i < d_; ++i) y += u_[r][i] * v[i];
    if (moduli_[r] > 1) y = ((y % moduli_[r]) + moduli_[r]) % moduli_[r];
    out.append(reinterpret_cast<const char*>(&y), sizeof y);
  }
  return out;
}

std::string LocalizedMembership::add_keys(const std::string& a, const std::string& b) const {
  std::string out = a;
  std::size_t slot = 0;
  for (std::size_t r = 0; r < d_; ++r) {
    if (moduli_[r] == 1) continue;
    long long x, y;
    std::memcpy(&x, a.data() + slot, sizeof x);
    std::memcpy(&y, b.data() + slot, sizeof y);
    long long z = x + y;
    if (moduli_[r] > 1) z %= moduli_[r];
    std::memcpy(out.data() + slot, &z, sizeof z);
    slot += sizeof z;
  }
  return out;
}

void LocalizedMembership::extend(long long weight) const {
  while (static_cast<long long>(levels_.size()) <= weight) {
    const long long w = static_cast<long long>(levels_.size());
    std::vector<std::string> level;
    for (std::size_t j = 0; j < gen_keys_.size(); ++j) {
      if (gen_weights_[j] > w) continue;
      for (const std::string& k : levels_[static_cast<std::size_t>(w - gen_weights_[j])]) {
        std::string s = add_keys(k, gen_keys_[j]);
        if (seen_.insert(s).second) level.push_back(std::move(s));
      }
    }
    levels_.push_back(std::move(level));
  }
}

bool LocalizedMembership::contains(const Degree& v) const {
  long long w = 0;
  for (std::size_t i = 0; i < d_; ++i) w += functional_[i] * v[i];
  if (full_) return key(v) == levels_.front().front();
  if (w < 0) return false;
  extend(w);
  return seen_.count(key(v)) > 0;
}

}  // namespace gkz
