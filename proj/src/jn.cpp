#include "cabling/jn.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cabling/errors.hpp"

namespace cabling {

namespace {

// Loop counters stay in machine words; anything near this is a runaway bound.
constexpr long kMaxSearch = 50'000'000;

long to_long(const Integer& x, const char* what) {
  if (!x.fits_slong_p() || x > kMaxSearch) throw std::overflow_error(std::string(what) + " too large to search");
  return x.get_si();
}

long need_at(const SlotValue& slot, long N) { return slot_need(slot, Integer(N)).get_si(); }

Integer next_prime_at_least(const Integer& x) {
  if (x <= 2) return 2;
  Integer p;
  Integer below = x - 1;
  mpz_nextprime(p.get_mpz_t(), below.get_mpz_t());
  return p;
}

// Bound on N for a two-slot pair when nothing else limits N: if the pair can
// take A/N and (N-A)/N at all, it can at some N no larger than this.
Integer pair_bound(const SlotValue& x, const SlotValue& y) {
  const ExtRational sum = x.value + y.value;
  if (sum < ExtRational(1)) {
    // A prime N with N(1 - sum) >= 3 leaves an admissible A strictly inside (0,N).
    const ExtRational gap = ExtRational(1) - sum;
    return next_prime_at_least(std::max(Integer(2), (ExtRational(3) / gap).ceil()));
  }
  if (sum == ExtRational(1) && !x.strict && !y.strict) return x.value.denominator();
  return 0;
}

std::optional<Integer> rest_bound(const std::vector<SlotValue>& values, std::size_t i, std::size_t j) {
  std::optional<Integer> bound;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == i || k == j) continue;
    if (auto b = slot_bound(values[k])) {
      if (!bound || *b < *bound) bound = b;
    }
  }
  return bound;
}

bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

// Smallest A in [lo, hi] coprime to N, if any.
std::optional<long> first_coprime(long lo, long hi, long N) {
  for (long a = std::max(lo, 1L); a <= std::min(hi, N - 1); ++a) {
    if (coprime(a, N)) return a;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(JNRule rule) {
  switch (rule) {
    case JNRule::IntegralWindow:
      return "integral-tau window";
    case JNRule::OutsideWindow:
      return "b outside [1, n+r-1]";
    case JNRule::MiddleWindow:
      return "2 <= b <= n+r-2";
    case JNRule::WitnessSearch:
      return "b = 1 witness search";
    case JNRule::ComplementedSearch:
      return "b = n+r-1, complemented witness search";
  }
  return "?";
}

std::vector<SlotValue> slot_values(const SeifertTuple& tuple) {
  std::vector<SlotValue> out;
  out.reserve(tuple.slot_count());
  for (const auto& g : tuple.gammas) out.push_back({g, true});
  for (std::size_t j = 0; j < tuple.taus.size(); ++j) out.push_back({tuple.taus[j], tuple.is_strict(j)});
  return out;
}

std::vector<SlotValue> complemented(const std::vector<SlotValue>& values) {
  std::vector<SlotValue> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back({ExtRational(1) - v.value, v.strict});
  return out;
}

Integer slot_need(const SlotValue& slot, const Integer& N) {
  const Integer scaled = slot.value.numerator() * N;
  Integer q;
  if (slot.strict) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), slot.value.denominator().get_mpz_t());
    return q + 1;
  }
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), slot.value.denominator().get_mpz_t());
  return q;
}

std::optional<Integer> slot_bound(const SlotValue& slot) {
  const Integer& n = slot.value.numerator();
  const Integer& d = slot.value.denominator();
  if (sgn(n) <= 0) return std::nullopt;
  Integer q;
  if (slot.strict) {
    mpz_cdiv_q(q.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    return q - 1;
  }
  mpz_fdiv_q(q.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  return q;
}

Integer search_bound(const std::vector<SlotValue>& values) {
  Integer best = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      auto b = rest_bound(values, i, j);
      Integer bound = b ? *b : pair_bound(values[i], values[j]);
      if (bound > best) best = bound;
    }
  }
  return best;
}

std::optional<JNWitness> witness_search(const std::vector<SlotValue>& values) {
  const std::size_t k = values.size();
  if (k < 3) throw std::invalid_argument("witness_search needs at least three slots");
  const long bound = to_long(search_bound(values), "search bound");
  std::vector<long> need(k);
  for (long N = 2; N <= bound; ++N) {
    std::size_t easy = 0;  // slots that accept 1/N
    for (std::size_t i = 0; i < k; ++i) {
      need[i] = need_at(values[i], N);
      if (need[i] <= 1) ++easy;
    }
    for (long A = 1; A < N; ++A) {
      if (!coprime(A, N)) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (need[i] > A) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i || need[j] > N - A) continue;
          const std::size_t pair_easy = (need[i] <= 1) + (need[j] <= 1);
          if (easy - pair_easy != k - 2) continue;
          JNWitness w{A, N, std::vector<ExtRational>(k, ratio(1, N))};
          w.assignment[i] = ratio(A, N);
          w.assignment[j] = ratio(N - A, N);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ExtRational> max_free_slot_value(const std::vector<SlotValue>& fixed) {
  const std::size_t k = fixed.size();
  if (k < 2) throw std::invalid_argument("max_free_slot_value needs at least two fixed slots");
  std::optional<ExtRational> best;
  auto offer = [&](long a, long N) {
    const ExtRational v = ratio(a, N);
    if (!best || v > *best) best = v;
  };

  // The free slot shares A/N and (N-A)/N with fixed slot j; the rest take 1/N.
  for (std::size_t j = 0; j < k; ++j) {
    auto b = rest_bound(fixed, j, j);
    if (!b) throw std::logic_error("free-slot search is unbounded");
    const long limit = to_long(*b, "free-slot bound");
    for (long N = 2; N <= limit; ++N) {
      const long nj = need_at(fixed[j], N);
      if (nj < 1) continue;
      if (nj > N - 1) continue;
      long a = N - nj;
      while (!coprime(a, N)) --a;
      offer(a, N);
    }
  }

  // The free slot takes 1/N; the smallest feasible N wins.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      auto b = rest_bound(fixed, i, j);
      const bool has_rest = k > 2;
      if (has_rest && !b) throw std::logic_error("free-slot search is unbounded");
      const long limit = to_long(has_rest ? *b : pair_bound(fixed[i], fixed[j]), "free-slot bound");
      for (long N = 2; N <= limit; ++N) {
        if (best && ratio(1, N) <= *best) break;
        const long lo = need_at(fixed[i], N);
        const long hi = N - need_at(fixed[j], N);
        if (first_coprime(lo, hi, N)) {
          offer(1, N);
          break;
        }
      }
    }
  }
  return best;
}

JNQuery make_query(const SeifertTuple& raw) {
  raw.validate();
  auto red = reduce_integral(normalize(raw));
  return {std::move(red.reduced), red.s, std::move(red.index_map)};
}

JNDecision jn_realizable(const JNQuery& query) {
  const auto& t = query.tuple;
  const long k = static_cast<long>(t.slot_count());
  const Integer& b = t.b;
  if (query.s > 0) return {2 - query.s <= b && b <= k - 2, JNRule::IntegralWindow, std::nullopt};
  if (k < 3) {
    throw UnsupportedArity("jn", "n+r = " + std::to_string(k) + " after reduction; the decision needs n+r >= 3");
  }
  if (b < 1 || b > k - 1) return {false, JNRule::OutsideWindow, std::nullopt};
  if (b >= 2 && b <= k - 2) return {true, JNRule::MiddleWindow, std::nullopt};
  JNDecision d;
  auto values = slot_values(t);
  if (b == k - 1) {
    values = complemented(values);
    d.rule = JNRule::ComplementedSearch;
  } else {
    d.rule = JNRule::WitnessSearch;
  }
  d.witness = witness_search(values);
  d.realizable = d.witness.has_value();
  return d;
}

JNDecision jn_realizable(const SeifertTuple& raw) { return jn_realizable(make_query(raw)); }

}  // namespace cabling
