#include "cabling/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cabling/errors.hpp"

namespace cabling {

namespace {

struct Frac {
  long num = 0;
  long den = 1;
  bool strict = false;
};

long small(const Integer& x) {
  if (!x.fits_slong_p() || abs(x) > 1'000'000'000L) throw std::overflow_error("oracle: value too large");
  return x.get_si();
}

Frac to_frac(const SlotValue& v) { return {small(v.value.numerator()), small(v.value.denominator()), v.strict}; }

// share/N against num/den.
bool meets(const Frac& f, long share, long N) {
  const long lhs = share * f.den;
  const long rhs = f.num * N;
  return f.strict ? lhs > rhs : lhs >= rhs;
}

std::optional<JNWitness> enumerate(const std::vector<Frac>& slots) {
  const std::size_t k = slots.size();
  if (k < 3) throw std::invalid_argument("oracle: enumeration needs at least three slots");
  long bound = 0;
  for (const auto& f : slots) {
    if (f.num <= 0 || f.num >= f.den) throw std::invalid_argument("oracle: slot values must lie in (0,1)");
    bound = std::max(bound, f.den / f.num);
  }
  std::vector<long> shares(k);
  for (long N = 2; N <= bound; ++N) {
    for (long A = 1; A < N; ++A) {
      if (std::gcd(A, N) != 1) continue;
      std::fill(shares.begin(), shares.end(), 1L);
      shares[0] = A;
      shares[1] = N - A;
      std::sort(shares.begin(), shares.end());
      do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < k; ++i) ok = meets(slots[i], shares[i], N);
        if (ok) {
          JNWitness w{A, N, {}};
          for (long s : shares) w.assignment.push_back(ratio(s, N));
          return w;
        }
      } while (std::next_permutation(shares.begin(), shares.end()));
    }
  }
  return std::nullopt;
}

bool valid_witness(const std::vector<Frac>& slots, const JNWitness& w) {
  if (w.assignment.size() != slots.size() || slots.size() < 3) return false;
  if (!w.A.fits_slong_p() || !w.N.fits_slong_p()) return false;
  const long A = w.A.get_si();
  const long N = w.N.get_si();
  if (!(0 < A && A < N) || std::gcd(A, N) != 1) return false;
  std::vector<long> expected(slots.size(), 1L);
  expected[0] = A;
  expected[1] = N - A;
  std::vector<long> got;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const ExtRational share = w.assignment[i] * ExtRational(w.N);
    if (!share.is_integer()) return false;
    got.push_back(small(share.numerator()));
    if (!meets(slots[i], got.back(), N)) return false;
  }
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  return expected == got;
}

}  // namespace

bool oracle_realizable(const SeifertTuple& raw) {
  raw.validate();
  Integer b = raw.b;
  long integral = 0;
  std::vector<Frac> slots;
  for (const auto& g : raw.gammas) slots.push_back({small(g.numerator()), small(g.denominator()), true});
  for (std::size_t j = 0; j < raw.taus.size(); ++j) {
    const ExtRational& t = raw.taus[j];
    const Integer fl = t.floor();
    b -= fl;
    const ExtRational frac = t - ExtRational(fl);
    const bool strict = raw.strict.count(j) != 0;
    if (frac == ExtRational(0)) {
      if (!strict) ++integral;  // strict integral slots are forced to the identity and vanish
      continue;
    }
    slots.push_back({small(frac.numerator()), small(frac.denominator()), strict});
  }
  const long k = static_cast<long>(slots.size());
  if (integral > 0) return 2 - integral <= b && b <= k + integral - 2;
  if (k == 0) return b == 0;
  if (k == 1) return false;
  if (k == 2) {
    return b == 1 && slots[0].num * slots[1].den + slots[1].num * slots[0].den == slots[0].den * slots[1].den;
  }
  if (b < 1 || b > k - 1) return false;
  if (b < k - 1 && b > 1) return true;
  if (b == k - 1) {
    for (auto& f : slots) f.num = f.den - f.num;
  }
  return enumerate(slots).has_value();
}

std::optional<JNWitness> exhaustive_witness(const std::vector<SlotValue>& values) {
  std::vector<Frac> slots;
  for (const auto& v : values) slots.push_back(to_frac(v));
  return enumerate(slots);
}

bool exhaustive_witness_check(const std::vector<SlotValue>& values, const std::optional<JNWitness>& claimed) {
  std::vector<Frac> slots;
  for (const auto& v : values) slots.push_back(to_frac(v));
  const bool exists = enumerate(slots).has_value();
  if (!claimed) return !exists;
  return exists && valid_witness(slots, *claimed);
}

ScanReport grid_scan_interval(const CableParams& params, const ExtRational& tau, const SlopeSet& expected,
                              const ScanOptions& options) {
  params.validate();
  if (tau.is_infinite()) throw DomainError("grid_scan_interval", "tau must be finite");
  if (options.max_denominator < 2) throw DomainError("grid_scan_interval", "max_denominator must be at least 2");

  const ExtRational gamma(params.q + params.s, params.q);
  const long centre = small(-tau.floor());
  const ExtRational lo(centre - 3);
  const ExtRational hi(centre + 2);
  auto inside = [&](const ExtRational& x) { return lo < x && x < hi; };

  std::set<ExtRational> points;
  for (long d = 1; d <= options.max_denominator; ++d) {
    for (long n = (centre - 3) * d + 1; n < (centre + 2) * d; ++n) {
      if (std::gcd(n, d) == 1) points.insert(ratio(n, d));
    }
  }
  const ExtRational step = ratio(1, options.max_denominator + 1);
  for (const auto& part : expected.affine_parts()) {
    for (const auto& end : {part.low, part.high}) {
      if (!end) continue;
      const ExtRational eps = step / ExtRational(end->denominator());
      for (const auto& x : {*end, *end - eps, *end + eps}) {
        if (inside(x)) points.insert(x);
      }
    }
  }

  std::set<std::size_t> strict;
  if (options.strict_tau) strict.insert(0);
  if (options.strict_new) strict.insert(1);

  ScanReport report;
  for (const auto& x : points) {
    const SeifertTuple tuple{{gamma}, {tau, x}, strict, 0};
    const bool got = oracle_realizable(tuple);
    ++report.tested_points;

    const JNQuery query = make_query(tuple);
    if (query.s > 0 || query.tuple.slot_count() >= 3) {
      const JNDecision d = jn_realizable(query);
      bool agrees = d.realizable == got;
      if (agrees && (d.rule == JNRule::WitnessSearch || d.rule == JNRule::ComplementedSearch)) {
        auto values = slot_values(query.tuple);
        if (d.rule == JNRule::ComplementedSearch) values = complemented(values);
        agrees = exhaustive_witness_check(values, d.witness);
      }
      if (!agrees) report.conflicts.push_back(x);
    }

    if (got) {
      if (!report.hull_low || x < *report.hull_low) report.hull_low = x;
      if (!report.hull_high || x > *report.hull_high) report.hull_high = x;
    }
    const bool want = expected.contains(x);
    if (want != got) report.mismatches.push_back({x, want, got});
  }
  return report;
}

}  // namespace cabling
