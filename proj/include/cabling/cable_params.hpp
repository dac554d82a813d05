#pragma once

#include "cabling/exact.hpp"

namespace cabling {

// The cable space C_{p,q} with its Bézout pair: ps + qr = 1, -q < s < 0 < r <= p.
struct CableParams {
  Integer p, q, r, s;

  ExtRational gamma() const { return ExtRational(q + s, q); }  // (q+s)/q
  ExtRational c() const { return ExtRational(-s, q); }         // 1 - gamma
  ExtRational slope() const { return ExtRational(p, q); }      // p/q
  void validate() const;
  friend bool operator==(const CableParams&, const CableParams&) = default;
};

CableParams bezout(const Integer& p, const Integer& q);

// f(x) = (sx + r)/(-qx + p): knot-exterior coordinates to inner cable coordinates.
IntMobius inner_basis_map(const CableParams& params);
// g(x) = pq + 1/(x + 1): outer cable coordinates to cable-knot coordinates.
IntMobius outer_basis_map(const CableParams& params);

}  // namespace cabling
