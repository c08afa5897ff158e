#pragma once

// Polyhedral geometry of the cone spanned by the columns of a pointed
// integer matrix: pointedness certificates, the face lattice, normalized
// volume, and membership in N A and its localizations N A + Z F.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gkz/intlinalg.hpp"

namespace gkz {

class NotFullRank : public std::runtime_error {
 public:
  explicit NotFullRank(const std::string& what) : std::runtime_error(what) {}
};

class NotPointed : public std::runtime_error {
 public:
  NotPointed(const std::string& what, std::optional<IntVector> counter)
      : std::runtime_error(what), counter_certificate(std::move(counter)) {}
  /// Nonzero u in N^n with A u = 0, when one was found.
  std::optional<IntVector> counter_certificate;
};

/// A d x n integer matrix of rank d whose columns lie in an open half-space.
class PointedMatrix {
 public:
  PointedMatrix() = default;
  PointedMatrix(IntMatrix matrix, IntVector certificate);

  const IntMatrix& matrix() const { return matrix_; }
  /// h with h . a_j > 0 for every column (primitive integer vector).
  const IntVector& certificate() const { return certificate_; }
  std::size_t d() const { return matrix_.rows(); }
  std::size_t n() const { return matrix_.cols(); }
  IntVector column(std::size_t j) const { return matrix_.column(j); }
  Degree column_degree(std::size_t j) const { return columns_[j]; }
  /// h . a_j, all strictly positive.
  const std::vector<long long>& column_heights() const { return heights_; }
  long long height(const Degree& v) const;

  bool verify_certificate() const;

 private:
  IntMatrix matrix_;
  IntVector certificate_;
  std::vector<Degree> columns_;
  std::vector<long long> heights_;
};

PointedMatrix make_pointed_matrix(const IntMatrix& m);

struct Face {
  std::vector<std::size_t> columns;  // sorted column indices
  IntVector functional;              // zero on the face, positive off it
  std::size_t dimension = 0;         // rank of Z F; the empty face has dimension 0

  bool contains(std::size_t j) const;
  bool is_subface_of(const Face& other) const;
  bool operator==(const Face& o) const { return columns == o.columns; }
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dimension, column indices)
  /// (i, j) whenever faces[i] is a proper subface of faces[j].
  std::vector<std::pair<std::size_t, std::size_t>> containment;

  std::size_t empty_face() const { return 0; }
  std::size_t full_face() const { return faces.size() - 1; }
  /// Index of the face with exactly these columns, or faces.size().
  std::size_t find(const std::vector<std::size_t>& columns) const;
};

FaceLattice face_lattice(const PointedMatrix& a);

/// Checks the supporting functional of `f` against the columns of `a`.
bool verify_face(const PointedMatrix& a, const Face& f);

enum class Placement { kLexicographic, kReverse };

/// d! times the Euclidean volume of conv(0, a_1, ..., a_n), by a placing
/// triangulation with the points visited in the given order.
Integer normalized_volume(const PointedMatrix& a, Placement order = Placement::kLexicographic);

/// Enumerates {u in N^m : M u = target} given positive per-column weights c
/// with c . u determined by the target (c = lambda M for some lambda).
class FiberEnumerator {
 public:
  FiberEnumerator() = default;
  FiberEnumerator(std::vector<Degree> columns, std::vector<long long> weights);

  /// Calls visit(u) for every solution with c . u == total_weight; stops early
  /// when visit returns false. Returns false iff stopped early.
  template <class Visit>
  bool for_each(const Degree& target, long long total_weight, Visit&& visit) const;

  std::size_t size() const { return columns_.size(); }

 private:
  template <class Visit>
  bool recurse(std::size_t k, long long budget, std::vector<long long>& u, const Degree& target,
               Visit& visit) const;
  bool solve_pivots(std::vector<long long>& u, const Degree& target) const;

  std::vector<Degree> columns_;
  std::vector<long long> weights_;
  std::size_t rows_ = 0;
  std::vector<std::size_t> pivots_;       // columns solved for
  std::vector<std::size_t> free_;         // columns enumerated
  std::vector<std::size_t> pivot_rows_;   // rows of the square pivot block
  std::vector<std::vector<long long>> adjugate_;  // of the pivot block
  long long det_ = 1;
};

struct Membership {
  bool member = false;
  IntVector witness;  // u in N^n with A u = v
};

Membership semigroup_member(const PointedMatrix& a, const IntVector& v);

/// Membership in N A + Z F.
bool localized_member(const PointedMatrix& a, const Face& f, const IntVector& v);

/// Repeated membership queries in N A + Z F for one face. Works in
/// Z^d / Z F (free part plus torsion, via a Smith form) and keeps the
/// images of N A there, sorted by face-functional weight. The table grows
/// lazily with the largest weight queried, so one instance must not be
/// shared between threads.
class LocalizedMembership {
 public:
  LocalizedMembership(const PointedMatrix& a, const Face& f);
  bool contains(const Degree& v) const;

 private:
  std::string key(const Degree& v) const;
  std::string add_keys(const std::string& a, const std::string& b) const;
  void extend(long long weight) const;

  std::size_t d_ = 0;
  std::vector<std::vector<long long>> u_;  // Smith left transform
  std::vector<long long> moduli_;          // per row of u_: > 1 torsion, 0 free, 1 dropped
  Degree functional_;
  std::vector<std::string> gen_keys_;
  std::vector<long long> gen_weights_;
  bool full_ = false;
  mutable std::vector<std::vector<std::string>> levels_;
  mutable std::unordered_set<std::string> seen_;
};

// ---- template implementation ----

template <class Visit>
bool FiberEnumerator::for_each(const Degree& target, long long total_weight, Visit&& visit) const {
  if (total_weight < 0) return true;
  std::vector<long long> u(columns_.size(), 0);
  return recurse(0, total_weight, u, target, visit);
}

template <class Visit>
bool FiberEnumerator::recurse(std::size_t k, long long budget, std::vector<long long>& u,
                              const Degree& target, Visit& visit) const {
  if (k == free_.size()) {
    if (!solve_pivots(u, target)) return true;
    return visit(static_cast<const std::vector<long long>&>(u));
  }
  const std::size_t j = free_[k];
  const long long w = weights_[j];
  for (long long x = 0; x * w <= budget; ++x) {
    u[j] = x;
    if (!recurse(k + 1, budget - x * w, u, target, visit)) {
      u[j] = 0;
      return false;
    }
  }
  u[j] = 0;
  return true;
}

}  // namespace gkz
