#include "cabling/cable_params.hpp"

#include "cabling/errors.hpp"

namespace cabling {

void CableParams::validate() const {
  if (p < 1 || q < 2) throw DomainError("cable", "need p >= 1 and q > 1");
  if (gcd(p, q) != 1) throw DomainError("cable", "p and q must be coprime");
  if (p * s + q * r != 1 || !(-q < s && s < 0 && 0 < r && r <= p)) {
    throw DomainError("cable", "(r, s) is not the normalized Bezout pair");
  }
}

CableParams bezout(const Integer& p, const Integer& q) {
  if (p < 1 || q < 2) throw DomainError("bezout", "need p >= 1 and q > 1");
  if (gcd(p, q) != 1) throw DomainError("bezout", "p and q must be coprime");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());  // in [1, q-1]
  const Integer s = inv - q;
  const Integer r = (1 - p * s) / q;
  CableParams out{p, q, r, s};
  out.validate();
  return out;
}

IntMobius inner_basis_map(const CableParams& params) { return {params.s, params.r, -params.q, params.p}; }

IntMobius outer_basis_map(const CableParams& params) {
  const Integer pq = params.p * params.q;
  return {pq, pq + 1, 1, 1};
}

}  // namespace cabling
