#pragma once

// Exact arithmetic on the rational projective line Q ∪ {∞}.
//
// Slopes are stored as reduced fractions n/d with d >= 0; the single point at
// infinity is 1/0. Sets of slopes are finite unions of arcs on the circle
// Q ∪ {∞}, kept in a canonical form so that equality is structural.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cabling {

using Integer = mpz_class;

class ExtRational {
 public:
  ExtRational() : num_(0), den_(1) {}
  ExtRational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of literals
  ExtRational(const Integer& value) : num_(value), den_(1) {}  // NOLINT
  ExtRational(Integer num, Integer den);

  static ExtRational infinity();

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  bool is_integer() const { return den_ == 1; }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  // Finite-only helpers; they throw std::domain_error on ∞.
  Integer floor() const;
  Integer ceil() const;
  ExtRational fractional_part() const;
  ExtRational operator-() const;

  std::string to_string() const;
  static ExtRational parse(std::string_view text);

  friend bool operator==(const ExtRational&, const ExtRational&) = default;

 private:
  Integer num_;
  Integer den_;
};

// Arithmetic and ordering on the affine part only; ∞ operands throw.
ExtRational operator+(const ExtRational& a, const ExtRational& b);
ExtRational operator-(const ExtRational& a, const ExtRational& b);
ExtRational operator*(const ExtRational& a, const ExtRational& b);
ExtRational operator/(const ExtRational& a, const ExtRational& b);
std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

inline ExtRational ratio(long num, long den) { return ExtRational(Integer(num), Integer(den)); }

// Integer Möbius action x -> (a x + b) / (c x + d) on Q ∪ {∞}.
struct IntMobius {
  Integer a, b, c, d;

  IntMobius(Integer a_, Integer b_, Integer c_, Integer d_);
  static IntMobius identity() { return {1, 0, 0, 1}; }

  Integer determinant() const { return a * d - b * c; }
  bool preserves_orientation() const { return sgn(determinant()) > 0; }
  // Adjugate; it induces the inverse map on the projective line.
  IntMobius inverse() const { return {d, -b, -c, a}; }
  IntMobius compose(const IntMobius& inner) const;  // this ∘ inner

  friend bool operator==(const IntMobius&, const IntMobius&) = default;
};

ExtRational mobius_apply(const IntMobius& m, const ExtRational& x);

class SlopeSet;

// One connected arc of the circle.
//
// A non-wrapping arc is an affine interval from `low` to `high` where an
// infinite `low` reads as -∞ and an infinite `high` as +∞; both denote the one
// projective point ∞ and the flag on that end says whether ∞ belongs to the
// arc. With low = high = ∞ it is the whole affine line.
//
// A wrapping arc is [low, +∞] ∪ [-∞, high] glued at ∞ (so ∞ belongs to it);
// it needs high < low, or low = high with both ends open (the circle minus one
// point). The degenerate wrapping arc with low = high = ∞ is the point {∞}.
struct Arc {
  ExtRational low;
  ExtRational high;
  bool low_closed = true;
  bool high_closed = true;
  bool wraps_infinity = false;

  static Arc closed(ExtRational lo, ExtRational hi) { return {lo, hi, true, true, false}; }
  static Arc open(ExtRational lo, ExtRational hi) { return {lo, hi, false, false, false}; }
  static Arc point(ExtRational x);

  bool is_point() const;
  bool contains(const ExtRational& x) const;
  SlopeSet to_set() const;
  std::string to_string() const;
  static Arc parse(std::string_view text);

  friend bool operator==(const Arc&, const Arc&) = default;
};

// An interval of the affine line Q with optional infinite ends. Infinite ends
// are always open; ∞ membership lives on SlopeSet.
struct AffineInterval {
  std::optional<ExtRational> low;   // nullopt = -∞
  std::optional<ExtRational> high;  // nullopt = +∞
  bool low_closed = false;
  bool high_closed = false;

  bool empty() const;
  bool contains(const ExtRational& x) const;
  friend bool operator==(const AffineInterval&, const AffineInterval&) = default;
};

class SlopeSet {
 public:
  SlopeSet() = default;
  SlopeSet(const Arc& arc) : SlopeSet(arc.to_set()) {}  // NOLINT

  static SlopeSet empty_set() { return {}; }
  static SlopeSet whole_circle();
  static SlopeSet affine_line();
  static SlopeSet point(const ExtRational& x);
  static SlopeSet interval(AffineInterval iv, bool with_infinity = false);

  bool empty() const { return parts_.empty() && !infinity_; }
  bool is_whole_circle() const;
  bool contains(const ExtRational& x) const;
  bool contains_infinity() const { return infinity_; }

  SlopeSet united(const SlopeSet& other) const;
  SlopeSet intersected(const SlopeSet& other) const;
  SlopeSet complement() const;
  SlopeSet without_infinity() const;
  SlopeSet with_infinity(bool present = true) const;

  // The affine pieces in increasing order and the canonical arc view.
  const std::vector<AffineInterval>& affine_parts() const { return parts_; }
  std::vector<Arc> arcs() const;

  std::string to_string() const;
  static SlopeSet parse(std::string_view text);

  friend bool operator==(const SlopeSet&, const SlopeSet&) = default;

 private:
  void canonicalize();

  std::vector<AffineInterval> parts_;
  bool infinity_ = false;
};

enum class SetOp { Union, Intersect, Complement };

SlopeSet slopeset_algebra(SetOp op, const SlopeSet& a, const SlopeSet& b = {});
bool slopeset_contains(const SlopeSet& s, const ExtRational& x);

// Image of an arc (or a whole slope set) under a nonsingular Möbius map.
SlopeSet mobius_arc_image(const IntMobius& m, const Arc& arc);
SlopeSet mobius_image(const IntMobius& m, const SlopeSet& set);

}  // namespace cabling
