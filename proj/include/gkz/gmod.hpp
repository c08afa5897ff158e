#pragma once

// Finitely generated Z^d-graded modules over R: free modules, presentations,
// minimal free resolutions, Ext into R, toric filtrations and quasi-degrees.
//
// Shift convention: basis element e_i of a free module has degree shifts[i],
// so x^u e_i sits in degree shifts[i] - A u. The free module R(a) of the
// usual notation is a single basis element of degree -a.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkz/gring.hpp"

namespace gkz {

class NotToric : public std::runtime_error {
 public:
  explicit NotToric(const std::string& what) : std::runtime_error(what) {}
};

struct GradedFreeModule {
  std::shared_ptr<const RingContext> ring;
  std::vector<Degree> shifts;

  std::size_t rank() const { return shifts.size(); }
  /// Degree of x^m e_k.
  Degree degree(const Monomial& m, std::uint32_t k) const;
  /// Degree of a nonzero homogeneous element, nullopt otherwise.
  std::optional<Degree> degree(const Vec& v) const;
  GradedFreeModule dual() const;
};

/// Map of free modules given by its columns: column j is the image of the
/// j-th source basis element, an element of `target` of degree source_shifts[j].
struct GradedMatrix {
  GradedFreeModule target;
  std::vector<Degree> source_shifts;
  std::vector<Vec> columns;

  std::size_t rows() const { return target.rank(); }
  std::size_t cols() const { return columns.size(); }
  GradedFreeModule source() const { return GradedFreeModule{target.ring, source_shifts}; }
  /// Polynomial entry (i, j).
  GradedPolynomial entry(std::size_t i, std::size_t j) const { return component(columns[j], static_cast<std::uint32_t>(i)); }
  bool has_unit_entry() const;
  /// The dual map target^* -> source^*.
  GradedMatrix transpose() const;
};

/// coker(relations): generators F0 modulo the submodule spanned by the relation columns.
class GradedPresentation {
 public:
  GradedPresentation() = default;
  GradedPresentation(GradedFreeModule generators, std::vector<Vec> relations);

  const GradedFreeModule& generators() const { return gens_; }
  const std::vector<Vec>& relations() const { return rels_; }
  const RingContext& ring() const { return *gens_.ring; }
  GradedMatrix relation_matrix() const;

  /// Reduced Groebner basis of the relation submodule (cached).
  const std::vector<Vec>& groebner_basis() const;
  bool is_zero() const;

 private:
  GradedFreeModule gens_;
  std::vector<Vec> rels_;
  mutable std::optional<std::vector<Vec>> gb_;
};

struct GradedResolution {
  std::vector<GradedFreeModule> modules;  // F_0, F_1, ...
  std::vector<GradedMatrix> maps;         // maps[k] : F_{k+1} -> F_k
  bool minimal = false;

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> ranks() const;
};

// ---- submodule primitives ----

ModuleOrder module_order(const GradedFreeModule& f);
GroebnerOptions graded_options(const GradedFreeModule& f);
std::vector<Vec> submodule_groebner(const GradedFreeModule& f, const std::vector<Vec>& gens);
/// Minimal homogeneous generating subset of gens (zero entries dropped).
std::vector<Vec> minimal_generators(const GradedFreeModule& f, const std::vector<Vec>& gens);
/// Minimal generators of {b in R^p : sum_i b_i v_i in <k_gens>}, where the
/// i-th source basis element has degree source_shifts[i] = deg v_i.
std::vector<Vec> preimage(const GradedFreeModule& target, const std::vector<Vec>& k_gens,
                          const std::vector<Vec>& vs, const std::vector<Degree>& source_shifts);

/// Kernel of the map, as a matrix whose target is m.source().
GradedMatrix syzygies(const GradedMatrix& m);

/// Removes generators killed by relations with unit entries, then drops
/// redundant relations.
GradedPresentation prune(const GradedPresentation& m);

GradedResolution minimal_free_resolution(const GradedPresentation& m, std::size_t max_length);
/// Checks phi_k o phi_{k+1} == 0 exactly for every k.
bool composes_to_zero(const GradedResolution& r);

/// Ext^j_R(M, R) from a resolution of M. Dualizing R(-a) gives R(a).
GradedPresentation ext_module(const GradedResolution& r, std::size_t j);
GradedPresentation ext_module(const GradedPresentation& m, std::size_t j);

/// dim_Q M_alpha.
long long hilbert_function(const GradedPresentation& m, const Degree& alpha);

/// All values of the Hilbert function of M at once, for degrees whose
/// standard monomials have height at most max_height: the standard
/// monomials of the relation Groebner basis are enumerated as an order
/// ideal and bucketed by degree.
class HilbertTable {
 public:
  HilbertTable(const GradedPresentation& m, long long max_height);
  /// Largest height h . (shift_k - alpha) over the generators, i.e. the
  /// height a table must reach to answer alpha.
  static long long required_height(const GradedPresentation& m, const Degree& alpha);
  long long value(const Degree& alpha) const;
  std::size_t size() const { return counts_.size(); }

 private:
  const RingContext* ring_ = nullptr;
  std::vector<Degree> shifts_;
  long long max_height_ = 0;
  std::map<Degree, long long> counts_;
};

/// S_A = R / I_A with generator in degree 0.
GradedPresentation semigroup_ring_module(std::shared_ptr<const RingContext> ctx);
/// S_F with generator in degree `shift`.
GradedPresentation face_ring_module(std::shared_ptr<const RingContext> ctx, const Face& f, const Degree& shift);

// ---- toric filtrations and quasi-degrees ----

struct FiltrationStep {
  Face face;
  Degree shift;  // degree of the generator of the successive quotient S_F
};

struct ToricFiltration {
  std::vector<FiltrationStep> steps;
};

/// dim of the quotient S_F with generator in degree `shift`, at alpha: 1 iff shift - alpha in N F.
long long step_hilbert(const RingContext& ctx, const FiltrationStep& step, const Degree& alpha);

enum class ExtractionOrder { kFirst, kLast };

/// Lazily computed face ideals I_F, indexed like ctx.faces().
class FaceIdealCache {
 public:
  explicit FaceIdealCache(std::shared_ptr<const RingContext> ctx);
  const GradedIdeal& get(std::size_t face_index);

 private:
  std::shared_ptr<const RingContext> ctx_;
  std::vector<std::optional<GradedIdeal>> ideals_;
};

/// Splits off cyclic submodules R c with Ann(c) = I_F, F a face, until
/// nothing remains. Among the minimal primes of Ann(M) the face of largest
/// dimension is taken; `order` breaks ties between faces and witnesses.
ToricFiltration toric_filtration(const GradedPresentation& m, ExtractionOrder order = ExtractionOrder::kFirst,
                                 FaceIdealCache* cache = nullptr);

/// Annihilator of coker(relations) as a list of ideal generators.
std::vector<GradedPolynomial> annihilator(const GradedPresentation& m);

struct Stratum {
  Degree shift;
  Face face;
};

/// Finite union of translated face spans shift + C F in canonical form.
class QuasiDegreeSet {
 public:
  QuasiDegreeSet() = default;
  QuasiDegreeSet(const IntMatrix& a, std::vector<Stratum> strata);

  const std::vector<Stratum>& strata() const { return strata_; }
  bool empty() const { return strata_.empty(); }
  /// Index of a stratum containing the rational point, or -1.
  long find(const RatVector& point) const;
  bool contains(const Degree& point) const;

  friend bool operator==(const QuasiDegreeSet& a, const QuasiDegreeSet& b);

 private:
  IntMatrix a_;
  std::vector<Stratum> strata_;
};

/// Canonical representative of `shift` modulo Z^d intersected with Q F.
Degree reduce_shift(const IntMatrix& a, const Face& f, const Degree& shift);
/// Whether shift + C F is contained in outer_shift + C G.
bool stratum_contained(const IntMatrix& a, const Stratum& inner, const Stratum& outer);
/// Whether point - shift lies in Q F.
bool in_span_translate(const IntMatrix& a, const Face& f, const RatVector& point, const Degree& shift);

QuasiDegreeSet quasidegrees(const RingContext& ctx, const ToricFiltration& filtration);
QuasiDegreeSet quasidegrees(const GradedPresentation& m);

}  // namespace gkz
