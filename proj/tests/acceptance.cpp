// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cabling/cable.hpp"
#include "cabling/cli.hpp"
#include "cabling/oracle.hpp"
#include "test_support.hpp"

using namespace cabling;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    if (ok()) {
      s << count_ << " checks";
    } else {
      s << failed_ << " of " << count_ << " checks failed; first: " << failures_.front();
    }
    return s.str();
  }

 private:
  long count_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::pair<long, long>> coprime_pairs(long max_p, long max_q) {
  std::vector<std::pair<long, long>> out;
  for (long q = 2; q <= max_q; ++q) {
    for (long p = 1; p <= max_p; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

std::string tag(long p, long q, const std::string& extra = "") {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")" + (extra.empty() ? "" : " " + extra);
}

// Every interval computed by criteria 2 to 6, for the sandwich check.
std::vector<RelativeIntervalResult> seen;

CableInterval record(const CableParams& params, bool strict, const ExtRational& tau) {
  auto ci = cable_interval(params, strict, tau);
  seen.push_back(ci.result);
  return ci;
}

void scan_against(Check& c, const CableParams& params, const ExtRational& tau, bool strict, const Arc& expected,
                  const std::string& label) {
  const auto report = grid_scan_interval(params, tau, expected.to_set(), {strict, false, 24});
  c.expect(report.passed(), label + " scan disagrees");
  c.expect(report.hull_low == expected.low && report.hull_high == expected.high,
           label + " hull differs from " + expected.to_string());
}

Check torus_goldens() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::tuple<long, long, std::string>> cases{{2, 3, "[-inf,1]"}, {3, 5, "[-inf,7]"}, {2, 5, "[-inf,3]"}};
  for (const auto& [p, q, want] : cases) {
    c.expect(torus_knot_detected(p, q).regular == Arc::parse(want), tag(p, q));
    cli::CommandArgs args;
    args.p = std::to_string(p);
    args.q = std::to_string(q);
    c.expect(cli::run_command("torus", args).set.front() == want, tag(p, q, "cli"));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  return c;
}

Check sweep_a() {
  Check c;
  for (const auto& [p, q] : coprime_pairs(7, 7)) {
    const auto params = bezout(p, q);
    for (long b = 0; q * b <= p; ++b) {
      const ExtRational tau = special_slope(params, b);
      for (bool strict : {false, true}) {
        const Arc closed = special_slope_interval(params, b, strict);
        const auto label = tag(p, q, "b=" + std::to_string(b) + (strict ? " J={1}" : ""));
        c.expect(record(params, strict, tau).result.t == closed, label + " cable interval differs");
        scan_against(c, params, tau, strict, closed, label);
      }
    }
  }
  return c;
}

Check sweep_b() {
  Check c;
  for (const auto& [p, q] : coprime_pairs(7, 7)) {
    const auto params = bezout(p, q);
    for (long b = (p + q - 1) / q; b <= 12; ++b) {
      if (q * b == p) continue;
      const ExtRational tau = special_slope(params, b);
      const Arc closed = special_slope_interval(params, b, false);
      const auto label = tag(p, q, "b=" + std::to_string(b));
      c.expect(record(params, false, tau).result.t == closed, label + " cable interval differs");
      scan_against(c, params, tau, false, closed, label);
    }
  }
  return c;
}

std::vector<ExtRational> twelfths() {
  std::vector<ExtRational> out;
  for (long k = -24; k <= 24; ++k) out.push_back(ratio(k, 12));
  return out;
}

Check dispatch() {
  Check c;
  const auto params = bezout(2, 3);
  const ExtRational gamma = ratio(2, 3);
  for (const auto& tau : twelfths()) {
    const ExtRational frac = tau - ExtRational(tau.floor());
    CableBranch want = CableBranch::IntegralTau;
    if (frac != ExtRational(0)) {
      const ExtRational sum = gamma + frac;
      want = sum < ExtRational(1) ? CableBranch::Below : sum == ExtRational(1) ? CableBranch::Critical : CableBranch::Above;
    }
    const auto ci = record(params, false, tau);
    c.expect(ci.branch == want, "tau=" + tau.to_string() + " branch " + to_string(ci.branch));
    const auto report = grid_scan_interval(params, tau, ci.result.t_set());
    c.expect(report.passed(), "tau=" + tau.to_string() + " scan disagrees");
    c.expect(report.hull_low == ci.result.t.low && report.hull_high == ci.result.t.high,
             "tau=" + tau.to_string() + " hull differs");
  }
  return c;
}

Check inchworm() {
  Check c;
  const auto params = bezout(2, 3);
  const auto grid = twelfths();
  std::vector<Arc> t;
  for (const auto& tau : grid) t.push_back(record(params, false, tau).result.t);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const std::string at = "tau=" + grid[i].to_string();
    c.expect(t[i + 1].low <= t[i].low && t[i + 1].high <= t[i].high, at + " endpoint increases");
    c.expect(!(t[i + 1].low < t[i].low && t[i + 1].high < t[i].high), at + " both endpoints move");
  }
  const ExtRational cut = params.c();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      if (grid[i].floor() != grid[j].floor()) continue;
      const auto fi = grid[i].fractional_part();
      const auto fj = grid[j].fractional_part();
      const SlopeSet si = t[i].to_set();
      const SlopeSet sj = t[j].to_set();
      const std::string at = grid[i].to_string() + " <= " + grid[j].to_string();
      if (fi <= cut && fj <= cut) c.expect(si.united(sj) == si, at + " nesting below the cut");
      if (fi >= cut && fj >= cut) c.expect(si.united(sj) == sj, at + " nesting above the cut");
    }
  }
  return c;
}

Check genus_pipeline() {
  Check c;
  for (const auto& [p, q] : coprime_pairs(12, 12)) {
    const auto params = bezout(p, q);
    const ExtRational slope = ratio(p, q);
    for (long g = 1; g <= 5; ++g) {
      const ExtRational top(2 * g - 1);
      const SlopeSet input = SlopeSet::interval({std::nullopt, top, false, true}, true);
      const SlopeSet inner = mobius_image(inner_basis_map(params), input);
      for (const auto& part : inner.affine_parts()) {
        for (const auto& end : {part.low, part.high}) {
          if (!end) continue;
          record(params, false, *end);
          record(params, true, *end);
        }
      }
      const auto out = cable_detected_set(params, input, DetectionMode::Regular);
      const auto label = tag(p, q, "g=" + std::to_string(g));
      if (top < slope) {
        const SlopeSet want = SlopeSet::interval({std::nullopt, ExtRational(p * q - p - q + 2 * g * q), false, true}, true);
        c.expect(out.set == want && out.exactness == Exactness::Equals, label + " gives " + out.set.to_string());
      } else {
        c.expect(out.set.is_whole_circle(), label + " gives " + out.set.to_string());
      }
    }
    const auto whole = cable_detected_set(params, SlopeSet::whole_circle(), DetectionMode::Regular);
    c.expect(whole.set.is_whole_circle(), tag(p, q, "whole circle"));
  }
  return c;
}

Check complement_symmetry() {
  Check c;
  std::mt19937 rng(500);
  auto fraction = [&]() {
    const long d = 2 + static_cast<long>(rng() % 11);
    return ratio(1 + static_cast<long>(rng() % (d - 1)), d);
  };
  int realisable = 0;
  for (int sample = 0; sample < 500; ++sample) {
    const int total = 3 + static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % (total + 1));
    SeifertTuple lhs;
    SeifertTuple rhs;
    for (int i = 0; i < n; ++i) {
      lhs.gammas.push_back(fraction());
      rhs.gammas.push_back(ExtRational(1) - lhs.gammas.back());
    }
    for (int j = 0; j < total - n; ++j) {
      lhs.taus.push_back(fraction());
      rhs.taus.push_back(ExtRational(1) - lhs.taus.back());
      if (rng() % 2) {
        lhs.strict.insert(j);
        rhs.strict.insert(j);
      }
    }
    lhs.b = total - 1;
    rhs.b = 1;
    const bool a = jn_realizable(lhs).realizable;
    realisable += a;
    c.expect(a == jn_realizable(rhs).realizable, "sample " + std::to_string(sample) + " jn");
    c.expect(a == oracle_realizable(rhs) && a == oracle_realizable(lhs), "sample " + std::to_string(sample) + " oracle");
  }
  c.expect(realisable > 0 && realisable < 500, "samples are all one answer: " + std::to_string(realisable));
  return c;
}

Check sandwich() {
  Check c;
  long index = 0;
  for (const auto& r : seen) {
    const std::string at = "interval #" + std::to_string(index++) + " " + r.t.to_string();
    if (!r.sandwich_applies) {
      c.expect(r.t.is_point() && r.t_strict == r.t_set(), at + " strict integral case is not a singleton");
      continue;
    }
    const ExtRational m0(r.quantities.m0);
    const ExtRational m1(r.quantities.m1);
    const SlopeSet core = SlopeSet::interval({m0, m1, false, false});
    const SlopeSet outer = SlopeSet::interval({m0 - ExtRational(1), m1 + ExtRational(1), false, false});
    c.expect(core.united(r.t_strict) == r.t_strict, at + " core not in strict set");
    c.expect(r.t_strict.united(r.t_set()) == r.t_set(), at + " strict set not in T");
    c.expect(r.t_set().united(outer) == outer, at + " T escapes (m0-1, m1+1)");
    if (m0 <= m1) c.expect(Arc::closed(m0, m1).to_set().united(r.t_set()) == r.t_set(), at + " [m0,m1] not in T");
    SlopeSet interior;
    if (!r.t.is_point()) interior = SlopeSet::interval({r.t.low, r.t.high, false, false});
    if (r.degenerate) {
      c.expect(r.t == Arc::point(m0) && r.t_strict == SlopeSet::point(m0), at + " degenerate case is not {m0}");
    } else {
      c.expect(r.t_strict == interior, at + " strict set is not the interior");
    }
  }
  c.expect(seen.size() > 500, "only " + std::to_string(seen.size()) + " intervals collected");
  return c;
}

Check slope_inequalities() {
  Check c;
  const ExtRational zero(0), half = ratio(1, 2), one(1);
  for (const auto& [p, q] : coprime_pairs(7, 7)) {
    const auto k = bezout(p, q);
    const ExtRational gamma = k.gamma();
    for (long b = 0; b <= 12; ++b) {
      if (q * b == p) continue;
      const ExtRational x(b * k.s + k.r, k.p - k.q * b);
      const ExtRational lo = std::min(x, gamma);
      const ExtRational hi = std::max(x, gamma);
      const auto label = tag(p, q, "b=" + std::to_string(b));
      if (q * b < p) {
        c.expect(zero < lo && lo <= half && half < hi && hi <= one, label + " range");
        const ExtRational prev((b - 1) * k.s + k.r, k.p - k.q * (b - 1));
        c.expect(k.c() < prev && prev < x, label + " ordering");
      } else {
        c.expect(ExtRational(b) >= ExtRational(k.r, -k.s) && ExtRational(k.r, -k.s) > k.slope(), label + " b bound");
        c.expect(zero <= lo && lo < half && half <= hi && hi < one, label + " range");
        if (x != zero) c.expect(k.c() > x && x >= ExtRational(-k.s, k.q + 1), label + " ordering");
      }
    }
  }
  return c;
}

Check mobius_properties() {
  Check c;
  std::mt19937 rng(1000);
  for (int sample = 0; sample < 1000; ++sample) {
    const IntMobius m = cabling::testing::random_mobius(rng);
    const ExtRational x = sample % 10 == 0 ? ExtRational::infinity() : cabling::testing::random_rational(rng);
    const SlopeSet s = cabling::testing::random_set(rng);
    const std::string at = "sample " + std::to_string(sample);
    c.expect(mobius_apply(m.inverse(), mobius_apply(m, x)) == x, at + " round trip");
    const SlopeSet image = mobius_image(m, s);
    c.expect(image.contains(mobius_apply(m, x)) == s.contains(x), at + " membership");
    c.expect(mobius_image(m.inverse(), image) == s, at + " set round trip");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"torus knot golden values", torus_goldens},
      {"special slopes below p/q against the oracle", sweep_a},
      {"special slopes above p/q against the oracle", sweep_b},
      {"(2,3) case dispatch and oracle hulls", dispatch},
      {"inchworm monotonicity and nesting", inchworm},
      {"cable pipeline genus formula", genus_pipeline},
      {"complement symmetry", complement_symmetry},
      {"sandwich and strict-set laws", sandwich},
      {"special slope inequalities", slope_inequalities},
      {"Mobius round trip and membership", mobius_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << c.summary() << ", " << static_cast<long>(secs * 1000) << " ms)" << std::endl;
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
