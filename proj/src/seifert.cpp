#include "cabling/seifert.hpp"

#include "cabling/errors.hpp"

namespace cabling {

void SeifertTuple::validate() const {
  for (const auto& g : gammas) {
    if (g.is_infinite() || g <= ExtRational(0) || g >= ExtRational(1)) {
      throw DomainError("seifert", "gamma " + g.to_string() + " is not in (0,1)");
    }
  }
  for (const auto& t : taus) {
    if (t.is_infinite()) throw DomainError("seifert", "tau must be finite");
  }
  for (auto j : strict) {
    if (j >= taus.size()) throw DomainError("seifert", "strict index " + std::to_string(j + 1) + " out of range");
  }
}

NormalizedTaus normalize(const std::vector<ExtRational>& taus) {
  NormalizedTaus out{0, {}};
  out.fractional.reserve(taus.size());
  for (const auto& t : taus) {
    if (t.is_infinite()) throw DomainError("normalize", "tau must be finite");
    out.b -= t.floor();
    out.fractional.push_back(t.fractional_part());
  }
  return out;
}

SeifertTuple normalize(const SeifertTuple& tuple) {
  SeifertTuple out = tuple;
  auto n = normalize(tuple.taus);
  out.b = tuple.b + n.b;
  out.taus = std::move(n.fractional);
  return out;
}

Reduction reduce_integral(const SeifertTuple& tuple) {
  Reduction out;
  out.reduced.gammas = tuple.gammas;
  out.reduced.b = tuple.b;
  for (std::size_t j = 0; j < tuple.taus.size(); ++j) {
    const auto& t = tuple.taus[j];
    const bool integral = t.is_integer();
    const bool strict = tuple.is_strict(j);
    if (integral && strict) continue;
    if (integral) ++out.s;
    if (strict) out.reduced.strict.insert(out.reduced.taus.size());
    out.reduced.taus.push_back(t);
    out.index_map.push_back(j);
  }
  return out;
}

DerivedQuantities derived_quantities(const std::vector<ExtRational>& gammas, const std::vector<ExtRational>& taus,
                                     const std::set<std::size_t>& strict) {
  DerivedQuantities d;
  d.b0 = 0;
  for (std::size_t j = 0; j < taus.size(); ++j) {
    if (taus[j].is_infinite()) throw DomainError("derived_quantities", "tau must be finite");
    if (!taus[j].is_integer()) {
      ++d.r1;
    } else if (!strict.count(j)) {
      ++d.s0;
    }
    d.b0 -= taus[j].floor();
  }
  const long n = static_cast<long>(gammas.size());
  d.m0 = d.b0 - (n + d.r1 + d.s0 - 1);
  d.m1 = d.b0 + d.s0 - 1;
  return d;
}

}  // namespace cabling
