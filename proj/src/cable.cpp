#include "cabling/cable.hpp"

#include <functional>

#include "cabling/errors.hpp"

namespace cabling {

std::string to_string(DetectionMode mode) {
  switch (mode) {
    case DetectionMode::Weak:
      return "weak";
    case DetectionMode::Regular:
      return "regular";
    case DetectionMode::Strong:
      return "strong";
  }
  return "?";
}

std::string to_string(Exactness exactness) { return exactness == Exactness::Equals ? "equals" : "contains"; }

DetectionMode parse_mode(std::string_view text) {
  if (text == "weak") return DetectionMode::Weak;
  if (text == "regular") return DetectionMode::Regular;
  if (text == "strong") return DetectionMode::Strong;
  throw ParseError("unknown detection mode '" + std::string(text) + "'");
}

bool infinity_rule(DetectionMode, bool input_contains_infinity) { return input_contains_infinity; }

namespace {

// The τ-line is cut at the integers n and at n + c (c = 1 - γ). On each open
// cell one endpoint of the interval is pinned at -n-1 and the other moves
// monotonically, so a union over an open piece of a cell is governed by the
// limit at one end of the piece; that limit is the matching endpoint of the
// strict-τ interval, or -n-γ / -n-1-γ (never attained) at an integer.
class TauUnion {
 public:
  TauUnion(const CableParams& params, DetectionMode mode)
      : params_(params), strong_(mode == DetectionMode::Strong), gamma_(params.gamma()), c_(params.c()) {}

  SlopeSet over(const AffineInterval& iv) const {
    const auto lo_int = smallest_integer(iv);
    const auto hi_int = largest_integer(iv);
    const bool has_integer = !lo_int || !hi_int || *lo_int <= *hi_int;
    if (!has_integer) return walk(*iv.low, *iv.high, iv.low_closed, iv.high_closed);

    SlopeSet out;
    if (!lo_int && !hi_int) {
      out = SlopeSet::affine_line();
    } else if (!lo_int) {
      out = ray_leq(*hi_int);
    } else if (!hi_int) {
      out = ray_geq(*lo_int);
    } else {
      out = block(*lo_int, *hi_int);
    }
    if (iv.low && *iv.low < ExtRational(*lo_int)) {
      out = out.united(walk(*iv.low, ExtRational(*lo_int), iv.low_closed, false));
    }
    if (iv.high && *iv.high > ExtRational(*hi_int)) {
      out = out.united(walk(ExtRational(*hi_int), *iv.high, false, iv.high_closed));
    }
    return out;
  }

 private:
  static std::optional<Integer> smallest_integer(const AffineInterval& iv) {
    if (!iv.low) return std::nullopt;
    if (!iv.low->is_integer()) return iv.low->ceil();
    return iv.low_closed ? iv.low->numerator() : iv.low->numerator() + 1;
  }

  static std::optional<Integer> largest_integer(const AffineInterval& iv) {
    if (!iv.high) return std::nullopt;
    if (!iv.high->is_integer()) return iv.high->floor();
    return iv.high_closed ? iv.high->numerator() : iv.high->numerator() - 1;
  }

  SlopeSet closed(const ExtRational& a, const ExtRational& b) const { return SlopeSet::interval({a, b, true, true}); }
  SlopeSet interval(const ExtRational& a, const ExtRational& b, bool ac, bool bc) const {
    return SlopeSet::interval({a, b, ac, bc});
  }

  SlopeSet block(const Integer& m, const Integer& M) const {
    if (strong_) return closed(ExtRational(-M) - gamma_, ExtRational(-m) - gamma_);
    return closed(ExtRational(-M - 1), ExtRational(-m));
  }

  SlopeSet ray_geq(const Integer& m) const {
    const ExtRational top = strong_ ? ExtRational(-m) - gamma_ : ExtRational(-m);
    return SlopeSet::interval({std::nullopt, top, false, true});
  }

  SlopeSet ray_leq(const Integer& M) const {
    const ExtRational bottom = strong_ ? ExtRational(-M) - gamma_ : ExtRational(-M - 1);
    return SlopeSet::interval({bottom, std::nullopt, true, false});
  }

  SlopeSet at(const ExtRational& tau) const {
    const auto ci = cable_interval(params_, strong_, tau);
    return strong_ ? ci.result.t_strict : ci.result.t_set();
  }

  // Union over τ in an open piece (a, b) of the cell [n, n+c].
  SlopeSet lower_cell(const ExtRational& a) const {
    const Integer n = a.floor();
    const ExtRational pinned(-n - 1);
    if (a.is_integer()) return interval(pinned, ExtRational(-n) - gamma_, !strong_, false);
    const ExtRational reach = cable_interval(params_, true, a).result.t.high;
    return interval(pinned, reach, !strong_, !strong_);
  }

  // Union over τ in an open piece (a, b) of the cell [n+c, n+1].
  SlopeSet upper_cell(const ExtRational& b) const {
    const Integer n = b.ceil() - 1;
    const ExtRational pinned(-n - 1);
    if (b.is_integer()) return interval(pinned - gamma_, pinned, false, !strong_);
    const ExtRational reach = cable_interval(params_, true, b).result.t.low;
    return interval(reach, pinned, !strong_, !strong_);
  }

  // [lo, hi] lies inside one unit interval [n, n+1].
  SlopeSet walk(const ExtRational& lo, const ExtRational& hi, bool lo_closed, bool hi_closed) const {
    if (lo == hi) return lo_closed && hi_closed ? at(lo) : SlopeSet{};
    std::vector<ExtRational> cuts{lo};
    const ExtRational mid = ExtRational(lo.floor()) + c_;
    if (lo < mid && mid < hi) cuts.push_back(mid);
    cuts.push_back(hi);

    SlopeSet out;
    if (lo_closed) out = out.united(at(lo));
    if (hi_closed) out = out.united(at(hi));
    if (cuts.size() == 3) out = out.united(at(mid));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const ExtRational& a = cuts[i];
      const ExtRational& b = cuts[i + 1];
      const bool lower = a.fractional_part() < c_;
      out = out.united(lower ? lower_cell(a) : upper_cell(b));
    }
    return out;
  }

  const CableParams& params_;
  bool strong_;
  ExtRational gamma_;
  ExtRational c_;
};

}  // namespace

SlopeSet cable_tau_union(const CableParams& params, DetectionMode mode, const SlopeSet& taus) {
  params.validate();
  TauUnion u(params, mode);
  SlopeSet out;
  for (const auto& part : taus.affine_parts()) out = out.united(u.over(part));
  return out;
}

DetectedSet cable_detected_set(const CableParams& params, const SlopeSet& input, DetectionMode mode) {
  params.validate();
  const SlopeSet inner = mobius_image(inner_basis_map(params), input);
  SlopeSet outer = cable_tau_union(params, mode, inner.without_infinity());
  outer = outer.with_infinity(infinity_rule(mode, inner.contains_infinity()));
  DetectedSet out{mobius_image(outer_basis_map(params), outer), Exactness::Equals};
  switch (mode) {
    case DetectionMode::Weak:
      break;
    case DetectionMode::Regular:
      if (input.is_whole_circle() && !out.set.is_whole_circle()) out.exactness = Exactness::Contains;
      break;
    case DetectionMode::Strong:
      out.exactness = Exactness::Contains;
      break;
  }
  return out;
}

TorusKnotSets torus_knot_detected(const Integer& p, const Integer& q) {
  if (p < 2 || q < 2) throw DomainError("torus_knot_detected", "torus knots need p, q >= 2");
  const CableParams params = bezout(p, q);
  const IntMobius g = outer_basis_map(params);
  // The unknot's exterior is a solid torus whose only detected slope is the
  // longitude 0, which f sends to r/p.
  const auto ci = cable_interval(params, true, mobius_apply(inner_basis_map(params), ExtRational(0)));
  const auto regular = mobius_image(g, ci.result.t_set()).arcs();
  if (regular.size() != 1) throw std::logic_error("torus knot interval is not a single arc");
  return {regular.front(), mobius_image(g, ci.result.t_strict)};
}

ExtRational cable_genus_bound(const Integer& p, const Integer& q, const Integer& genus) {
  bezout(p, q);
  if (genus < 0) throw DomainError("cable_genus_bound", "genus must be non-negative");
  return ExtRational(p * q - p - q + 2 * genus * q);
}

}  // namespace cabling
