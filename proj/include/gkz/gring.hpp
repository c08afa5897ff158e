#pragma once

// The Z^d-graded polynomial ring R = Q[d_1..d_n] attached to a pointed
// matrix A, graded by deg d_j = -a_j, together with toric and face ideals.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkz/conegeom.hpp"
#include "gkz/groebner.hpp"
#include "gkz/poly.hpp"

namespace gkz {

class RingContext {
 public:
  explicit RingContext(PointedMatrix a);

  const PointedMatrix& matrix() const { return a_; }
  std::size_t n() const { return a_.n(); }
  std::size_t d() const { return a_.d(); }
  /// deg d_j = -a_j.
  const std::vector<Degree>& variable_degrees() const { return var_degrees_; }
  /// Sum of the columns.
  const Degree& epsilon() const { return epsilon_; }
  const MonomialOrder& order() const { return order_; }
  const ModuleOrder& poly_order() const { return poly_order_; }
  const FaceLattice& faces() const { return faces_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  /// Z^d-degree of x^u: -A u.
  Degree degree(const Monomial& m) const;
  /// Positive grading used for degree-by-degree Groebner runs: h . a_j.
  const std::vector<long long>& heights() const { return a_.column_heights(); }
  /// Height of a Z^d-degree: -h . deg, so that heights grow under multiplication.
  long long height(const Degree& deg) const;

  /// Fiber enumerator over the columns of A with positive weights h . a_j.
  const FiberEnumerator& fibers() const { return fibers_; }

 private:
  PointedMatrix a_;
  std::vector<Degree> var_degrees_;
  Degree epsilon_;
  MonomialOrder order_;
  ModuleOrder poly_order_;
  FaceLattice faces_;
  std::vector<std::string> names_;
  FiberEnumerator fibers_;
};

using GradedPolynomial = Vec;

/// Z^d-degree of a polynomial, or nullopt if it is zero or not homogeneous.
std::optional<Degree> homogeneous_degree(const RingContext& ctx, const GradedPolynomial& f);

class GradedIdeal {
 public:
  GradedIdeal(std::shared_ptr<const RingContext> ring, std::vector<GradedPolynomial> generators);

  const RingContext& ring() const { return *ring_; }
  std::shared_ptr<const RingContext> ring_ptr() const { return ring_; }
  const std::vector<GradedPolynomial>& generators() const { return generators_; }
  bool is_graded() const { return graded_; }
  bool is_zero() const;

  /// Reduced Groebner basis under the ring's order; computed once and cached.
  const std::vector<GradedPolynomial>& groebner_basis() const;
  bool contains(const GradedPolynomial& f) const;
  bool contains(const GradedIdeal& other) const;
  GradedPolynomial normal_form(const GradedPolynomial& f) const;

 private:
  std::shared_ptr<const RingContext> ring_;
  std::vector<GradedPolynomial> generators_;
  bool graded_ = true;
  mutable std::optional<std::vector<GradedPolynomial>> gb_;
};

std::vector<GradedPolynomial> buchberger(const GradedIdeal& ideal);

/// I_A, computed from a lattice basis of ker A followed by saturation by
/// every variable. Generators are the reduced Groebner basis.
GradedIdeal toric_ideal(std::shared_ptr<const RingContext> ctx);
/// Lattice-basis ideal <d^{u+} - d^{u-} : u in a basis of ker A>.
GradedIdeal lattice_basis_ideal(std::shared_ptr<const RingContext> ctx);
/// I_F = I_{A_F} + <d_j : j not in F>.
GradedIdeal face_ideal(std::shared_ptr<const RingContext> ctx, const Face& f);

/// (I : f^infinity) via an extra variable t and elimination of t from I + <t f - 1>.
GradedIdeal saturate(const GradedIdeal& ideal, const GradedPolynomial& f);

/// Ideal in xi-variables (same count as the ring) generated by the initial
/// forms, for total degree, of a Groebner basis under degrevlex.
std::vector<GradedPolynomial> initial_ideal_total_degree(const std::vector<GradedPolynomial>& ideal_gens,
                                                         std::size_t nvars);
std::vector<GradedPolynomial> initial_ideal_total_degree(const GradedIdeal& ideal);

/// Leading form of f for total degree.
GradedPolynomial top_form(const GradedPolynomial& f);

}  // namespace gkz
