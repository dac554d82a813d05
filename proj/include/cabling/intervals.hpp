#pragma once

// Relative slope intervals: for fixed data (γ; τ_*; J), the set t of τ′ making
// (J; 0; γ; τ_*, τ′) realisable and the set t_strict where τ′ is also strict.

#include <set>
#include <vector>

#include "cabling/cable_params.hpp"
#include "cabling/seifert.hpp"

namespace cabling {

struct RelativeIntervalResult {
  Arc t;  // closed, possibly a point
  SlopeSet t_strict;
  DerivedQuantities quantities;
  bool degenerate = false;        // t_strict = t = {m0}
  bool sandwich_applies = true;   // false only for the integral strict cable case

  SlopeSet t_set() const { return t.to_set(); }
};

RelativeIntervalResult relative_interval(const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                                         const std::set<std::size_t>& strict);

enum class Side { Left, Right };

// η (left) or ξ (right); throws WindowClosed when that side adds nothing.
ExtRational endpoint_search(Side side, const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                            const std::set<std::size_t>& strict);

enum class CableBranch { IntegralTau, Below, Critical, Above };
std::string to_string(CableBranch branch);

struct CableInterval {
  RelativeIntervalResult result;
  CableBranch branch;
};

// n = 1, γ = (q+s)/q; `strict_tau` puts the single τ in J.
CableInterval cable_interval(const CableParams& params, bool strict_tau, const ExtRational& tau);

// Closed forms at τ = (bs+r)/(p-qb).
Arc special_slope_interval(const CableParams& params, const Integer& b, bool strict);
ExtRational special_slope(const CableParams& params, const Integer& b);

enum class RayDirection { Geq, Leq };

// Union of t(τ) over τ >= tau0 (Geq) or τ <= tau0 (Leq), J = ∅.
SlopeSet ray_union(const CableParams& params, RayDirection direction, const ExtRational& tau0);

}  // namespace cabling
