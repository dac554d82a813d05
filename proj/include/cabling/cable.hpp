#pragma once

// Detected slopes through one cable space: push a knot exterior's slope set
// through C_{p,q} and read it off in the cable knot's coordinates.

#include <string>

#include "cabling/cable_params.hpp"
#include "cabling/intervals.hpp"

namespace cabling {

enum class DetectionMode { Weak, Regular, Strong };
enum class Exactness { Equals, Contains };

std::string to_string(DetectionMode mode);
std::string to_string(Exactness exactness);
DetectionMode parse_mode(std::string_view text);

// Whether ∞ (the fiber slope) belongs to the output, given the input.
bool infinity_rule(DetectionMode mode, bool input_contains_infinity);

// Union of the cable intervals over an affine set of τ in inner coordinates;
// uses 𝒯(C;∅;τ) for weak and regular, 𝒯̃(C;{1};τ) for strong.
SlopeSet cable_tau_union(const CableParams& params, DetectionMode mode, const SlopeSet& taus);

struct DetectedSet {
  SlopeSet set;
  Exactness exactness = Exactness::Equals;
  friend bool operator==(const DetectedSet&, const DetectedSet&) = default;
};

// `input` is in meridian/longitude coordinates of the companion knot; the
// result is in meridian/longitude coordinates of the cable knot.
DetectedSet cable_detected_set(const CableParams& params, const SlopeSet& input, DetectionMode mode);

struct TorusKnotSets {
  Arc regular;
  SlopeSet strong;
};

TorusKnotSets torus_knot_detected(const Integer& p, const Integer& q);

// 2g(K′) - 1 = pq - p - q + 2gq for the (p,q)-cable of a genus g knot.
ExtRational cable_genus_bound(const Integer& p, const Integer& q, const Integer& genus);

}  // namespace cabling
