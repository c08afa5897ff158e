#pragma once

// Buchberger's algorithm for submodules of free modules over Q[x_1..x_m],
// with Gebauer-Moeller pair pruning and the sugar selection strategy.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gkz/poly.hpp"

namespace gkz {

struct GroebnerOptions {
  /// Positive weight of each variable; selection degree of a term is
  /// sum_j var_weight[j] * u_j + comp_weight[comp]. Empty means all ones / zeros.
  std::vector<long long> var_weight;
  std::vector<long long> comp_weight;
  /// Inputs are homogeneous for the weights above: pairs and inputs are then
  /// processed degree by degree and `minimal` reports which inputs were
  /// needed (reduced to nonzero), i.e. form a minimal generating set.
  bool homogeneous = false;
  /// Rank-one input: enables the coprime-leading-term criterion.
  bool ideal = false;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

struct GroebnerResult {
  std::vector<Vec> basis;     // reduced, monic, sorted ascending by leading term
  std::vector<bool> minimal;  // per input, meaningful in homogeneous mode
  GroebnerStats stats;
};

GroebnerResult groebner(const ModuleOrder& ord, const std::vector<Vec>& inputs, const GroebnerOptions& opt = {});

/// Full normal form of f with respect to a list of reducers (any list works;
/// for a Groebner basis the result is canonical).
Vec normal_form(const ModuleOrder& ord, const Vec& f, const std::vector<Vec>& reducers);

/// True iff every element of `elements` reduces to zero.
bool reduces_to_zero(const ModuleOrder& ord, const std::vector<Vec>& elements, const std::vector<Vec>& gb);

/// Process-wide counters for --stats style reporting.
GroebnerStats& global_groebner_stats();

}  // namespace gkz
