#include "cabling/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cabling/errors.hpp"

namespace cabling {

namespace {

void require_finite(const ExtRational& x, const char* op) {
  if (x.is_infinite()) throw std::domain_error(std::string(op) + ": operand is inf");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed integer '" + std::string(s) + "'");
  }
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

bool is_infinity_token(std::string_view s) {
  return s == "inf" || s == "+inf" || s == "-inf" || s == "∞" || s == "-∞" || s == "+∞";
}

// Lower bounds: -∞ first; at equal values a closed end comes first.
bool lower_before(const AffineInterval& x, const AffineInterval& y) {
  if (!x.low) return y.low.has_value();
  if (!y.low) return false;
  if (*x.low != *y.low) return *x.low < *y.low;
  return x.low_closed && !y.low_closed;
}

// Arc going in the increasing circle direction from `from` to `to`.
SlopeSet circle_arc(const ExtRational& from, const ExtRational& to, bool from_closed, bool to_closed) {
  if (from.is_infinite() && to.is_infinite()) return SlopeSet::affine_line().with_infinity(from_closed || to_closed);
  if (from.is_infinite()) return SlopeSet::interval({std::nullopt, to, false, to_closed}, from_closed);
  if (to.is_infinite()) return SlopeSet::interval({from, std::nullopt, from_closed, false}, to_closed);
  if (from < to) return SlopeSet::interval({from, to, from_closed, to_closed});
  SlopeSet upper = SlopeSet::interval({from, std::nullopt, from_closed, false}, true);
  SlopeSet lower = SlopeSet::interval({std::nullopt, to, false, to_closed});
  return upper.united(lower);
}

SlopeSet affine_image(const IntMobius& m, const AffineInterval& part) {
  if (part.low && part.high && *part.low == *part.high) return SlopeSet::point(mobius_apply(m, *part.low));
  const ExtRational at_infinity = mobius_apply(m, ExtRational::infinity());
  const ExtRational u = part.low ? mobius_apply(m, *part.low) : at_infinity;
  const ExtRational v = part.high ? mobius_apply(m, *part.high) : at_infinity;
  const bool uc = part.low && part.low_closed;
  const bool vc = part.high && part.high_closed;
  if (m.preserves_orientation()) return circle_arc(u, v, uc, vc);
  return circle_arc(v, u, vc, uc);
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtRational

ExtRational::ExtRational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw std::domain_error("0/0 is not a slope");
    num_ = 1;
    return;
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtRational ExtRational::infinity() { return ExtRational(Integer(1), Integer(0)); }

Integer ExtRational::floor() const {
  require_finite(*this, "floor");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Integer ExtRational::ceil() const {
  require_finite(*this, "ceil");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

ExtRational ExtRational::fractional_part() const { return *this - ExtRational(floor()); }

ExtRational ExtRational::operator-() const {
  if (is_infinite()) return *this;
  return ExtRational(-num_, den_);
}

std::string ExtRational::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

ExtRational ExtRational::parse(std::string_view text) {
  text = trim(text);
  if (is_infinity_token(text)) return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("sign belongs on the numerator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'; write inf");
  return ExtRational(num, den);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  require_finite(a, "+");
  require_finite(b, "+");
  return ExtRational(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                     a.denominator() * b.denominator());
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  require_finite(a, "*");
  require_finite(b, "*");
  return ExtRational(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
  require_finite(a, "/");
  require_finite(b, "/");
  if (b.numerator() == 0) throw std::domain_error("division by zero");
  return ExtRational(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  require_finite(a, "<=>");
  require_finite(b, "<=>");
  const int c = cmp(a.numerator() * b.denominator(), b.numerator() * a.denominator());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// IntMobius

IntMobius::IntMobius(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (determinant() == 0) throw std::domain_error("singular Mobius matrix");
}

IntMobius IntMobius::compose(const IntMobius& in) const {
  return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

ExtRational mobius_apply(const IntMobius& m, const ExtRational& x) {
  if (x.is_infinite()) return ExtRational(m.a, m.c);
  const Integer& n = x.numerator();
  const Integer& d = x.denominator();
  return ExtRational(m.a * n + m.b * d, m.c * n + m.d * d);
}

// ---------------------------------------------------------------------------
// Arc

Arc Arc::point(ExtRational x) {
  if (x.is_infinite()) return {x, x, true, true, true};
  return {x, x, true, true, false};
}

bool Arc::is_point() const {
  if (low != high || !low_closed || !high_closed) return false;
  return low.is_infinite() ? wraps_infinity : !wraps_infinity;
}

bool Arc::contains(const ExtRational& x) const { return to_set().contains(x); }

SlopeSet Arc::to_set() const {
  if (!wraps_infinity) {
    if (low.is_infinite() && high.is_infinite()) {
      if (low_closed != high_closed) throw std::invalid_argument("arc gives two memberships for inf");
      return SlopeSet::affine_line().with_infinity(low_closed);
    }
    AffineInterval iv;
    bool inf = false;
    if (low.is_infinite()) {
      inf = inf || low_closed;
    } else {
      iv.low = low;
      iv.low_closed = low_closed;
    }
    if (high.is_infinite()) {
      inf = inf || high_closed;
    } else {
      iv.high = high;
      iv.high_closed = high_closed;
    }
    if (iv.low && iv.high && (*iv.high < *iv.low || (*iv.high == *iv.low && !(low_closed && high_closed)))) {
      throw std::invalid_argument("empty or reversed arc " + to_string());
    }
    return SlopeSet::interval(iv, inf);
  }
  // [low, +∞] ∪ [-∞, high]
  if (low.is_finite() && high.is_finite()) {
    if (low < high) throw std::invalid_argument("wrapping arc with high > low covers twice");
    if (low == high && (low_closed || high_closed)) throw std::invalid_argument("wrapping arc meets itself");
  }
  SlopeSet result = SlopeSet::point(ExtRational::infinity());
  if (low.is_finite()) result = result.united(SlopeSet::interval({low, std::nullopt, low_closed, false}));
  if (high.is_finite()) result = result.united(SlopeSet::interval({std::nullopt, high, false, high_closed}));
  return result;
}

std::string Arc::to_string() const {
  if (is_point()) return "{" + low.to_string() + "}";
  const char* open_l = low_closed ? "[" : "(";
  const char* open_r = high_closed ? "]" : ")";
  auto lo = low.is_infinite() ? std::string("-inf") : low.to_string();
  auto hi = high.is_infinite() ? std::string("inf") : high.to_string();
  if (!wraps_infinity) return open_l + lo + "," + hi + open_r;
  return std::string(open_l) + low.to_string() + ",inf]∪[-inf," + high.to_string() + open_r;
}

Arc Arc::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    return point(ExtRational::parse(text.substr(1, text.size() - 2)));
  }
  if (text.size() < 5) throw ParseError("malformed arc '" + std::string(text) + "'");
  const char l = text.front();
  const char r = text.back();
  if ((l != '[' && l != '(') || (r != ']' && r != ')')) throw ParseError("malformed arc '" + std::string(text) + "'");
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("arc needs exactly two endpoints: '" + std::string(text) + "'");
  }
  const auto lo_text = trim(body.substr(0, comma));
  const auto hi_text = trim(body.substr(comma + 1));
  if (lo_text == "inf" || lo_text == "+inf") throw ParseError("left end of an arc may be -inf, not +inf");
  if (hi_text == "-inf") throw ParseError("right end of an arc may be inf, not -inf");
  Arc arc{ExtRational::parse(lo_text), ExtRational::parse(hi_text), l == '[', r == ']', false};
  try {
    (void)arc.to_set();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return arc;
}

// ---------------------------------------------------------------------------
// AffineInterval / SlopeSet

bool AffineInterval::empty() const {
  if (!low || !high) return false;
  if (*low < *high) return false;
  if (*low == *high) return !(low_closed && high_closed);
  return true;
}

bool AffineInterval::contains(const ExtRational& x) const {
  if (x.is_infinite()) return false;
  if (low) {
    if (x < *low || (x == *low && !low_closed)) return false;
  }
  if (high) {
    if (x > *high || (x == *high && !high_closed)) return false;
  }
  return true;
}

SlopeSet SlopeSet::whole_circle() { return affine_line().with_infinity(true); }

SlopeSet SlopeSet::affine_line() { return interval({std::nullopt, std::nullopt, false, false}); }

SlopeSet SlopeSet::point(const ExtRational& x) {
  SlopeSet s;
  if (x.is_infinite()) {
    s.infinity_ = true;
  } else {
    s.parts_.push_back({x, x, true, true});
  }
  return s;
}

SlopeSet SlopeSet::interval(AffineInterval iv, bool with_infinity) {
  if (!iv.low) iv.low_closed = false;
  if (!iv.high) iv.high_closed = false;
  SlopeSet s;
  s.infinity_ = with_infinity;
  if (!iv.empty()) s.parts_.push_back(std::move(iv));
  s.canonicalize();
  return s;
}

bool SlopeSet::is_whole_circle() const {
  return infinity_ && parts_.size() == 1 && !parts_[0].low && !parts_[0].high;
}

bool SlopeSet::contains(const ExtRational& x) const {
  if (x.is_infinite()) return infinity_;
  return std::any_of(parts_.begin(), parts_.end(), [&](const AffineInterval& p) { return p.contains(x); });
}

void SlopeSet::canonicalize() {
  std::erase_if(parts_, [](const AffineInterval& p) { return p.empty(); });
  std::sort(parts_.begin(), parts_.end(), lower_before);
  std::vector<AffineInterval> merged;
  for (auto& p : parts_) {
    if (merged.empty()) {
      merged.push_back(p);
      continue;
    }
    AffineInterval& cur = merged.back();
    bool joins = false;
    if (!cur.high || !p.low) {
      joins = true;
    } else if (*p.low < *cur.high) {
      joins = true;
    } else if (*p.low == *cur.high) {
      joins = cur.high_closed || p.low_closed;
    }
    if (!joins) {
      merged.push_back(p);
      continue;
    }
    if (!cur.high) continue;
    if (!p.high) {
      cur.high.reset();
      cur.high_closed = false;
    } else if (*p.high > *cur.high) {
      cur.high = p.high;
      cur.high_closed = p.high_closed;
    } else if (*p.high == *cur.high) {
      cur.high_closed = cur.high_closed || p.high_closed;
    }
  }
  parts_ = std::move(merged);
}

SlopeSet SlopeSet::united(const SlopeSet& other) const {
  SlopeSet s = *this;
  s.parts_.insert(s.parts_.end(), other.parts_.begin(), other.parts_.end());
  s.infinity_ = infinity_ || other.infinity_;
  s.canonicalize();
  return s;
}

SlopeSet SlopeSet::intersected(const SlopeSet& other) const {
  SlopeSet s;
  s.infinity_ = infinity_ && other.infinity_;
  for (const auto& x : parts_) {
    for (const auto& y : other.parts_) {
      AffineInterval iv = x;
      if (!iv.low || (y.low && (*y.low > *iv.low || (*y.low == *iv.low && !y.low_closed)))) {
        iv.low = y.low;
        iv.low_closed = y.low_closed;
      }
      if (!iv.high || (y.high && (*y.high < *iv.high || (*y.high == *iv.high && !y.high_closed)))) {
        iv.high = y.high;
        iv.high_closed = y.high_closed;
      }
      if (!iv.empty()) s.parts_.push_back(iv);
    }
  }
  s.canonicalize();
  return s;
}

SlopeSet SlopeSet::complement() const {
  SlopeSet s;
  s.infinity_ = !infinity_;
  std::optional<ExtRational> cursor;  // nullopt = -∞
  bool cursor_closed = false;         // whether the gap includes `cursor`
  bool at_start = true;
  for (const auto& p : parts_) {
    if (p.low) {
      AffineInterval gap{at_start ? std::nullopt : cursor, p.low, at_start ? false : cursor_closed, !p.low_closed};
      if (!gap.empty()) s.parts_.push_back(gap);
    }
    at_start = false;
    if (!p.high) {
      s.canonicalize();
      return s;
    }
    cursor = p.high;
    cursor_closed = !p.high_closed;
  }
  s.parts_.push_back({at_start ? std::nullopt : cursor, std::nullopt, at_start ? false : cursor_closed, false});
  s.canonicalize();
  return s;
}

SlopeSet SlopeSet::without_infinity() const { return with_infinity(false); }

SlopeSet SlopeSet::with_infinity(bool present) const {
  SlopeSet s = *this;
  s.infinity_ = present;
  return s;
}

std::vector<Arc> SlopeSet::arcs() const {
  const ExtRational inf = ExtRational::infinity();
  std::vector<Arc> out;
  if (parts_.empty()) {
    if (infinity_) out.push_back(Arc::point(inf));
    return out;
  }
  auto to_arc = [&](const AffineInterval& p) {
    return Arc{p.low.value_or(inf), p.high.value_or(inf), p.low ? p.low_closed : false,
               p.high ? p.high_closed : false, false};
  };
  for (const auto& p : parts_) out.push_back(to_arc(p));
  if (!infinity_) return out;

  Arc& first = out.front();
  Arc& last = out.back();
  const bool first_unbounded = !parts_.front().low;
  const bool last_unbounded = !parts_.back().high;
  if (parts_.size() == 1 && first_unbounded && last_unbounded) {
    first.low_closed = first.high_closed = true;
  } else if (first_unbounded && last_unbounded) {
    Arc wrap{last.low, first.high, last.low_closed, first.high_closed, true};
    out.pop_back();
    out.erase(out.begin());
    out.push_back(wrap);
  } else if (first_unbounded) {
    first.low_closed = true;
  } else if (last_unbounded) {
    last.high_closed = true;
  } else {
    out.insert(out.begin(), Arc::point(inf));
  }
  return out;
}

std::string SlopeSet::to_string() const {
  const auto view = arcs();
  if (view.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (i) s += "∪";
    s += view[i].to_string();
  }
  return s;
}

SlopeSet SlopeSet::parse(std::string_view text) {
  text = trim(text);
  if (text == "{}" || text == "empty") return {};
  SlopeSet result;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const auto piece = trim(text.substr(start, end - start));
    if (piece.empty()) throw ParseError("empty component in slope set '" + std::string(text) + "'");
    result = result.united(Arc::parse(piece).to_set());
  };
  const std::string_view cup = "∪";
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, cup.size()) == cup) {
      flush(i);
      i += cup.size();
      start = i;
    } else if (text[i] == 'U' || text[i] == 'u') {
      flush(i);
      ++i;
      start = i;
    } else {
      ++i;
    }
  }
  flush(text.size());
  return result;
}

SlopeSet slopeset_algebra(SetOp op, const SlopeSet& a, const SlopeSet& b) {
  switch (op) {
    case SetOp::Union:
      return a.united(b);
    case SetOp::Intersect:
      return a.intersected(b);
    case SetOp::Complement:
      return a.complement();
  }
  throw std::logic_error("unknown set operation");
}

bool slopeset_contains(const SlopeSet& s, const ExtRational& x) { return s.contains(x); }

SlopeSet mobius_arc_image(const IntMobius& m, const Arc& arc) { return mobius_image(m, arc.to_set()); }

SlopeSet mobius_image(const IntMobius& m, const SlopeSet& set) {
  SlopeSet out;
  for (const auto& part : set.affine_parts()) out = out.united(affine_image(m, part));
  if (set.contains_infinity()) out = out.united(SlopeSet::point(mobius_apply(m, ExtRational::infinity())));
  return out;
}

}  // namespace cabling
