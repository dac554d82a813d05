#include "cabling/intervals.hpp"

#include <stdexcept>

#include "cabling/errors.hpp"
#include "cabling/jn.hpp"

namespace cabling {

namespace {

struct Setup {
  DerivedQuantities d;
  std::vector<SlotValue> fixed;  // γ's, then non-integral τ̄ (strict iff in J)
};

Setup prepare(const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
              const std::set<std::size_t>& strict) {
  SeifertTuple{gammas, taus, strict, 0}.validate();
  Setup out;
  out.d = derived_quantities(gammas, taus, strict);
  if (static_cast<long>(gammas.size()) + out.d.r1 + out.d.s0 < 2) {
    throw InsufficientData("relative_interval", "n + r1 + s0 < 2");
  }
  for (const auto& g : gammas) out.fixed.push_back({g, true});
  for (std::size_t j = 0; j < taus.size(); ++j) {
    if (!taus[j].is_integer()) out.fixed.push_back({taus[j].fractional_part(), strict.count(j) != 0});
  }
  return out;
}

// On the right window τ′ ∈ (m1, m1+1) the tuple has b = 1 and the new slot
// takes τ̄′; on the left window (m0-1, m0) it has b = n + r1 and, after
// complementing, the new slot takes 1 - τ̄′.
std::optional<ExtRational> window_reach(const Setup& s, Side side) {
  if (s.d.s0 > 0) return std::nullopt;
  return side == Side::Right ? max_free_slot_value(s.fixed) : max_free_slot_value(complemented(s.fixed));
}

Arc closed_or_point(const ExtRational& lo, const ExtRational& hi) {
  return lo == hi ? Arc::point(lo) : Arc::closed(lo, hi);
}

SlopeSet open_interval(const ExtRational& lo, const ExtRational& hi) {
  return SlopeSet::interval({lo, hi, false, false});
}

}  // namespace

RelativeIntervalResult relative_interval(const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                                         const std::set<std::size_t>& strict) {
  const Setup s = prepare(gammas, taus, strict);
  const ExtRational m0(s.d.m0);
  const ExtRational m1(s.d.m1);
  RelativeIntervalResult out{Arc::point(m0), {}, s.d};
  if (s.d.s0 > 0) {
    out.t = Arc::closed(m0, m1);
    out.t_strict = open_interval(m0, m1);
    return out;
  }

  const auto right = window_reach(s, Side::Right);
  const auto left = window_reach(s, Side::Left);
  const ExtRational lo = left ? m0 - *left : m0;
  const ExtRational hi = right ? m1 + *right : m1;

  if (s.fixed.size() == 2) {
    ExtRational total(0);
    for (const auto& g : gammas) total = total + g;
    for (const auto& t : taus) total = total + t;
    const ExtRational balance = -total;
    bool strict_fractional = false;
    for (auto j : strict) strict_fractional = strict_fractional || !taus[j].is_integer();
    if (balance == m0 && (!gammas.empty() || strict_fractional)) {
      if (left || right) throw std::logic_error("degenerate relative interval has an open window");
      out.t = Arc::point(m0);
      out.t_strict = SlopeSet::point(m0);
      out.degenerate = true;
      return out;
    }
    if (!gammas.empty() && (left.has_value() != (balance < m0) || right.has_value() != (balance > m0))) {
      throw std::logic_error("window search disagrees with the two-slot gate");
    }
  }

  out.t = closed_or_point(lo, hi);
  out.t_strict = open_interval(lo, hi);
  return out;
}

ExtRational endpoint_search(Side side, const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                            const std::set<std::size_t>& strict) {
  const Setup s = prepare(gammas, taus, strict);
  const auto reach = window_reach(s, side);
  if (!reach) throw WindowClosed("endpoint_search", side == Side::Left ? "left window is closed" : "right window is closed");
  return side == Side::Left ? ExtRational(s.d.m0) - *reach : ExtRational(s.d.m1) + *reach;
}

std::string to_string(CableBranch branch) {
  switch (branch) {
    case CableBranch::IntegralTau:
      return "tau integral";
    case CableBranch::Below:
      return "gamma + frac(tau) < 1";
    case CableBranch::Critical:
      return "gamma + frac(tau) = 1";
    case CableBranch::Above:
      return "gamma + frac(tau) > 1";
  }
  return "?";
}

CableInterval cable_interval(const CableParams& params, bool strict_tau, const ExtRational& tau) {
  params.validate();
  if (tau.is_infinite()) throw DomainError("cable_interval", "tau must be finite");
  const ExtRational gamma = params.gamma();
  const ExtRational frac = tau.fractional_part();
  CableBranch branch = CableBranch::IntegralTau;
  if (frac != ExtRational(0)) {
    const ExtRational sum = gamma + frac;
    branch = sum < ExtRational(1) ? CableBranch::Below : sum == ExtRational(1) ? CableBranch::Critical : CableBranch::Above;
  }
  std::set<std::size_t> strict;
  if (strict_tau) strict.insert(0);
  if (strict_tau && tau.is_integer()) {
    // The τ map is forced to be the identity; only τ′ = -τ - γ survives.
    const ExtRational x = -tau - gamma;
    RelativeIntervalResult r{Arc::point(x), SlopeSet::point(x), derived_quantities({gamma}, {tau}, strict)};
    r.sandwich_applies = false;
    return {r, branch};
  }
  return {relative_interval({gamma}, {tau}, strict), branch};
}

ExtRational special_slope(const CableParams& params, const Integer& b) {
  return ExtRational(b * params.s + params.r, params.p - params.q * b);
}

Arc special_slope_interval(const CableParams& params, const Integer& b, bool strict) {
  params.validate();
  const Integer& p = params.p;
  const Integer& q = params.q;
  const ExtRational minus_one(-1);
  if (b < 0) throw DomainError("special_slope_interval", "b must be non-negative");
  if (q * b <= p) {
    if (!strict) return Arc::closed(minus_one - ExtRational(Integer(1), p - q * b), minus_one);
    if (special_slope(params, b) == ExtRational(1)) return Arc::point(-ExtRational(2 * q + params.s, q));
    return Arc::closed(minus_one - ExtRational(Integer(1), p - q * (b - 1)), minus_one);
  }
  if (strict) throw DomainError("special_slope_interval", "no strict closed form for b > p/q");
  return Arc::closed(minus_one, minus_one + ExtRational(Integer(1), b * q - p));
}

SlopeSet ray_union(const CableParams& params, RayDirection direction, const ExtRational& tau0) {
  params.validate();
  if (tau0.is_infinite()) throw DomainError("ray_union", "tau0 must be finite");
  const ExtRational fl(tau0.floor());
  const ExtRational frac = tau0.fractional_part();
  const ExtRational c = params.c();
  const ExtRational zero(0);
  if (direction == RayDirection::Geq) {
    if (frac == zero) return SlopeSet::interval({std::nullopt, -fl, false, true});
    const SlopeSet ray = SlopeSet::interval({std::nullopt, -fl - ExtRational(1), false, true});
    if (frac < c) return ray.united(cable_interval(params, false, tau0).result.t_set());
    return ray;
  }
  const SlopeSet ray = SlopeSet::interval({-fl - ExtRational(1), std::nullopt, true, false});
  if (frac <= c) return ray;
  return cable_interval(params, false, tau0).result.t_set().united(ray);
}

}  // namespace cabling
