#pragma once

// Sparse polynomials and free-module elements with exact rational
// coefficients. A Vec is a list of terms c * x^u * e_k sorted strictly
// descending under a ModuleOrder; a polynomial is a Vec living in component 0.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gkz/intlinalg.hpp"

namespace gkz {

constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};
  std::uint32_t mask = 0;  // bit j set iff e[j] > 0

  void refresh_mask();
  long long total_degree() const;
  bool is_one() const { return mask == 0; }
  bool divides(const Monomial& other) const;

  static Monomial variable(std::size_t j, std::int32_t power = 1);
  static Monomial from_exponents(const std::vector<long long>& u);
  std::vector<long long> exponents(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b, assuming b divides a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Weight rows followed by a reverse-lexicographic tie-break.
/// The default (one all-ones row) is degree reverse lexicographic.
struct MonomialOrder {
  std::size_t nvars = 0;
  std::vector<std::vector<long long>> weights;

  static MonomialOrder degrevlex(std::size_t nvars);
  /// Eliminates the last `k` variables: their total degree first, then
  /// degrevlex on the rest.
  static MonomialOrder elimination_last(std::size_t nvars, std::size_t k);

  int compare(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Rational c;
  Monomial m;
  std::uint32_t comp = 0;

  friend bool operator==(const Term& a, const Term& b) { return a.comp == b.comp && a.m == b.m && a.c == b.c; }
};

using Vec = std::vector<Term>;

/// Term order on a free module. Components are grouped into blocks; every
/// term in a lower block is larger than every term in a higher block. Inside
/// a block: monomial first, then lower component index is larger.
struct ModuleOrder {
  MonomialOrder mono;
  std::vector<int> block;  // per component; missing entries mean block 0

  explicit ModuleOrder(MonomialOrder m = {}, std::vector<int> b = {}) : mono(std::move(m)), block(std::move(b)) {}
  int block_of(std::uint32_t comp) const { return comp < block.size() ? block[comp] : 0; }
  int compare(const Term& a, const Term& b) const;
  int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const;
};

/// Sorts, merges equal monomials and drops zero coefficients.
void normalize(const ModuleOrder& ord, Vec& v);
Vec add(const ModuleOrder& ord, const Vec& a, const Vec& b);
Vec sub(const ModuleOrder& ord, const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
/// c * m * a; order-preserving so no re-sort is needed.
Vec mul_term(const Vec& a, const Rational& c, const Monomial& m);
/// p * a for a polynomial p (component 0 terms).
Vec mul_poly(const ModuleOrder& ord, const Vec& p, const Vec& a);
/// a - c * m * b.
Vec sub_mul(const ModuleOrder& ord, const Vec& a, const Rational& c, const Monomial& m, const Vec& b);
/// Moves every term into component `comp + offset`.
Vec shift_components(const Vec& a, long offset);
void make_monic(Vec& a);
/// Scales to integer coefficients with content 1 and positive leading coefficient.
void make_primitive(Vec& a);
/// Part of `a` in component k, as a polynomial in component 0.
Vec component(const Vec& a, std::uint32_t k);
bool is_constant(const Vec& p);

Vec monomial_poly(const Monomial& m, const Rational& c = 1, std::uint32_t comp = 0);
/// x^plus - x^minus.
Vec binomial(const Monomial& plus, const Monomial& minus, const ModuleOrder& ord);

std::string to_string(const Vec& v, const std::vector<std::string>& var_names, bool show_components = false);
std::string monomial_string(const Monomial& m, const std::vector<std::string>& var_names);
std::vector<std::string> default_variable_names(const std::string& stem, std::size_t n);

}  // namespace gkz
