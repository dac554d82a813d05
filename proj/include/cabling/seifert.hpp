#pragma once

// Raw Seifert slope data (J; b; γ; τ) and the bookkeeping that prepares it for
// the realisability decision.
//
// Indices into `taus` are 0-based throughout the library; the CLI converts
// from the 1-based form users type.

#include <set>
#include <vector>

#include "cabling/exact.hpp"

namespace cabling {

struct SeifertTuple {
  std::vector<ExtRational> gammas;
  std::vector<ExtRational> taus;
  std::set<std::size_t> strict;  // J
  Integer b = 0;

  std::size_t slot_count() const { return gammas.size() + taus.size(); }
  bool is_strict(std::size_t tau_index) const { return strict.count(tau_index) != 0; }
  void validate() const;
  friend bool operator==(const SeifertTuple&, const SeifertTuple&) = default;
};

struct NormalizedTaus {
  Integer b;
  std::vector<ExtRational> fractional;
};

// b = -Σ⌊τᵢ⌋ and τ̄ᵢ = τᵢ - ⌊τᵢ⌋.
NormalizedTaus normalize(const std::vector<ExtRational>& taus);

// Moves the integer parts of the taus into b.
SeifertTuple normalize(const SeifertTuple& tuple);

struct Reduction {
  SeifertTuple reduced;
  int s = 0;                           // integral τ̄ left after dropping
  std::vector<std::size_t> index_map;  // reduced tau index -> original tau index
};

// Drops integral τ̄ whose index is in J; expects a normalized tuple.
Reduction reduce_integral(const SeifertTuple& tuple);

struct DerivedQuantities {
  int r1 = 0;
  int s0 = 0;
  Integer b0, m0, m1;
  friend bool operator==(const DerivedQuantities&, const DerivedQuantities&) = default;
};

// Quantities attached to fixed data τ_* = (τ₁..τ_{r-1}) and J ⊆ indices of τ_*.
DerivedQuantities derived_quantities(const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                                     const std::set<std::size_t>& strict);

}  // namespace cabling
