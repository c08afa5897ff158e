#pragma once

// Hypergeometric queries on top of the exceptional arrangement: rank-jump
// tests for rational parameters, the generic rank, and finiteness
// certificates for in(I_F) plus the Euler forms at a sample point.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkz/localcoh.hpp"

namespace gkz {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class InfiniteDimensional : public std::runtime_error {
 public:
  explicit InfiniteDimensional(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter beta in Q^d.
struct ParameterPoint {
  RatVector beta;

  /// Comma separated rationals such as "1,-2/3,0".
  static ParameterPoint parse(const std::string& text);
  std::string to_string() const;
};

struct JumpVerdict {
  bool jumping = false;
  std::optional<ExceptionalStratum> witness;
};

/// Whether beta lies on a stratum of the arrangement, i.e. beta - shift is in
/// the rational span of the face. Throws DimensionMismatch when |beta| != d.
JumpVerdict is_rank_jumping(const RingContext& ctx, const ExceptionalArrangement& arrangement,
                            const ParameterPoint& beta);

/// vol(A) normalized to the lattice Z A: normalized_volume / [Z^d : Z A].
/// Equals the holonomic rank at every non-exceptional parameter.
Integer generic_rank(const PointedMatrix& a);

struct CoherenceCertificate {
  Face face;
  RatVector sample;
  long long quotient_dimension = 0;
};

/// dim_Q of Q[xi] / (in(I_F) + <sum_j a_ij x_j xi_j : i = 1..d>) at x = sample.
/// The initial ideal is taken for total degree. Throws InfiniteDimensional
/// when some variable has no pure power among the leading terms.
CoherenceCertificate coherence_certificate(std::shared_ptr<const RingContext> ctx, const Face& face,
                                           const RatVector& sample);

/// Sample points with odd coordinates in 1..17 drawn from a seeded generator.
std::vector<RatVector> coherence_samples(std::size_t n, std::size_t count, unsigned long long seed);

/// Numerator K(t) of the Hilbert series K(t) / (1 - t)^n of R / <monomials>,
/// all variables of degree 1. Coefficients by power of t.
std::vector<Integer> k_polynomial(const std::vector<Monomial>& generators, std::size_t nvars);

/// Degree of S_A in the grading deg d_j = 1, read off its Hilbert series.
/// nullopt unless (1, ..., 1) lies in the rational row span of A.
std::optional<Integer> hilbert_multiplicity(std::shared_ptr<const RingContext> ctx);

}  // namespace gkz
