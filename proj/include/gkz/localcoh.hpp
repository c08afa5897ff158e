#pragma once

// Graded local cohomology of S_A along two independent routes: Ext modules
// plus local duality, and the face-indexed complex of localizations of S_A.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkz/gmod.hpp"

namespace gkz {

class ConventionMismatch : public std::runtime_error {
 public:
  explicit ConventionMismatch(const std::string& what) : std::runtime_error(what) {}
};

class InternalInconsistency : public std::runtime_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::runtime_error(what) {}
};

struct LocalCohSlice {
  Degree degree;
  std::vector<long long> dims;  // dim H^i_m(S_A)_degree for i = 0..d
};

/// The complex 0 -> S_A -> (+)_{rays} S_A[F^-1] -> ... -> S_A[A^-1] -> 0 with
/// one summand per face, placed in position dim F. Slices are memoized by
/// the set of faces whose localization is nonzero in the given degree.
class IshidaComplex {
 public:
  explicit IshidaComplex(const RingContext& ctx);

  LocalCohSlice slice(const Degree& alpha);
  /// Exact check that consecutive incidence matrices multiply to zero.
  bool squares_to_zero() const;
  /// Incidence sign between faces[f] and faces[g], 0 unless f is a facet of g.
  int incidence(std::size_t f, std::size_t g) const { return sign_[f][g]; }

 private:
  std::vector<long long> cohomology(const std::vector<bool>& active) const;

  std::size_t d_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> sign_;
  std::vector<LocalizedMembership> members_;
  std::map<std::vector<bool>, std::vector<long long>> memo_;
};

LocalCohSlice ishida_slice(const RingContext& ctx, const Degree& alpha);

/// Resolution of S_A and every Ext^j_R(S_A, R), computed once.
struct HomologicalData {
  std::shared_ptr<const RingContext> ctx;
  GradedIdeal toric;
  GradedResolution resolution;
  std::vector<GradedPresentation> ext;  // index j = 0..n

  std::size_t projective_dimension() const { return resolution.length(); }
};

HomologicalData compute_homological_data(std::shared_ptr<const RingContext> ctx);

/// dim H^i_m(S_A)_alpha through duality: dim Ext^{n-i}_R(S_A, R)_{eps - alpha}.
long long local_cohomology_via_ext(const HomologicalData& data, std::size_t i, const Degree& alpha);

/// Cap on the number of degrees in the default cube.
constexpr long long kMaxBoxDegrees = 70000;

/// Default cube radius: max(8, 2 * largest |coordinate| of a resolution shift),
/// shrunk (never below 8) until the cube has at most kMaxBoxDegrees points,
/// unless GKZ_DEGREE_BOX is set.
long long default_box(const HomologicalData& data);
/// Parses GKZ_DEGREE_BOX; returns -1 when unset. Throws on a malformed value.
long long box_from_environment();

struct CrossCheckEntry {
  Degree alpha;
  std::size_t i = 0;
  long long ishida = 0;
  long long ext = 0;
};

struct CrossCheckReport {
  long long box = 0;
  std::size_t degrees_checked = 0;
  std::vector<CrossCheckEntry> nonzero;     // agreeing nonzero entries with i < d
  std::vector<CrossCheckEntry> mismatches;  // any i <= d
  bool differential_ok = true;
};

/// Compares both routes for every alpha with |alpha_i| <= box and every
/// i <= d. Throws ConventionMismatch when `strict` and anything disagrees.
CrossCheckReport cross_check(const HomologicalData& data, long long box, bool strict = true);

struct ExceptionalStratum {
  Degree shift;
  Face face;
  std::vector<std::size_t> indices;  // cohomological degrees i contributing it
};

/// E_A as a canonical union of shift + C F in parameter coordinates.
struct ExceptionalArrangement {
  std::vector<ExceptionalStratum> strata;
  bool empty() const { return strata.empty(); }
};

/// Union over i < d of the quasi-degrees of Ext^{n-i}_R(S_A, R(eps)).
ExceptionalArrangement exceptional_arrangement(const HomologicalData& data);
/// Per-module filtrations used for the arrangement, indexed by i (empty when Ext^{n-i} = 0).
std::vector<ToricFiltration> local_cohomology_filtrations(const HomologicalData& data);

struct CohenMacaulayCertificate {
  bool cohen_macaulay = false;
  std::size_t projective_dimension = 0;
  std::size_t expected = 0;  // n - d
  std::vector<ExceptionalStratum> witness;  // one stratum when not CM
};

CohenMacaulayCertificate is_cohen_macaulay(const HomologicalData& data, const ExceptionalArrangement& arrangement);

}  // namespace gkz
