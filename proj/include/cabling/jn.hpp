#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabling/seifert.hpp"

namespace cabling {

// One inequality of the b = 1 system: the slot's share A_i/N must exceed
// `value` (strict) or reach it (non-strict).
struct SlotValue {
  ExtRational value;
  bool strict = false;
  friend bool operator==(const SlotValue&, const SlotValue&) = default;
};

struct JNWitness {
  Integer A, N;
  std::vector<ExtRational> assignment;  // share given to each slot, in slot order
  friend bool operator==(const JNWitness&, const JNWitness&) = default;
};

struct JNQuery {
  SeifertTuple tuple;  // normalized and reduced
  int s = 0;
  std::vector<std::size_t> index_map;
};

enum class JNRule { IntegralWindow, OutsideWindow, MiddleWindow, WitnessSearch, ComplementedSearch };

struct JNDecision {
  bool realizable = false;
  JNRule rule = JNRule::OutsideWindow;
  // Present when the answer came from the search; it certifies the values
  // that were searched, which are complemented under ComplementedSearch.
  std::optional<JNWitness> witness;
};

std::string to_string(JNRule rule);

// Gammas first (always strict), then taus (strict iff in J).
std::vector<SlotValue> slot_values(const SeifertTuple& tuple);

// Smallest numerator a with a/N meeting the slot's inequality.
Integer slot_need(const SlotValue& slot, const Integer& N);

// Largest N with 1/N meeting the slot's inequality; nullopt when unbounded.
std::optional<Integer> slot_bound(const SlotValue& slot);

JNQuery make_query(const SeifertTuple& raw);
JNDecision jn_realizable(const JNQuery& query);
JNDecision jn_realizable(const SeifertTuple& raw);

Integer search_bound(const std::vector<SlotValue>& values);
std::optional<JNWitness> witness_search(const std::vector<SlotValue>& values);

// Largest share a fresh non-strict slot can take in some witness for
// `fixed` plus that slot; nullopt when no witness exists at all.
std::optional<ExtRational> max_free_slot_value(const std::vector<SlotValue>& fixed);

std::vector<SlotValue> complemented(const std::vector<SlotValue>& values);

}  // namespace cabling
