#pragma once

// Brute-force checks for the interval calculus. Nothing here builds an
// interval: a scan decides grid points one at a time and compares them with
// whatever closed form the caller expects.

#include <optional>
#include <string>
#include <vector>

#include "cabling/cable_params.hpp"
#include "cabling/jn.hpp"

namespace cabling {

// Realisability decided without the jn module: own normalization, own window
// rules, exhaustive b = 1 enumeration. Also covers n + r <= 2 after
// reduction, which jn_realizable rejects.
bool oracle_realizable(const SeifertTuple& raw);

// Every (A, N) with N <= max ⌊1/v⌋ and every arrangement of the shares.
std::optional<JNWitness> exhaustive_witness(const std::vector<SlotValue>& values);

// With a claimed witness: it is valid and some witness exists. Without one:
// no witness exists.
bool exhaustive_witness_check(const std::vector<SlotValue>& values, const std::optional<JNWitness>& claimed);

struct ScanMismatch {
  ExtRational point;
  bool expected = false;
  bool got = false;
  friend bool operator==(const ScanMismatch&, const ScanMismatch&) = default;
};

struct ScanReport {
  std::optional<ExtRational> hull_low, hull_high;  // empty when no point is realisable
  std::size_t tested_points = 0;
  std::vector<ScanMismatch> mismatches;
  // Points where jn_realizable and the independent decision disagree, or the
  // jn witness did not survive exhaustive checking.
  std::vector<ExtRational> conflicts;

  bool passed() const { return mismatches.empty() && conflicts.empty(); }
};

struct ScanOptions {
  bool strict_tau = false;  // J = {1}
  bool strict_new = false;  // τ′ strict as well, i.e. the strict set
  long max_denominator = 24;
};

// Scans τ′ around -⌊τ⌋ (a window containing (m0-2, m1+2)) for the cable
// tuple (J; 0; γ; τ, τ′). Endpoints of `expected` and points just outside
// them are evaluated directly as well.
ScanReport grid_scan_interval(const CableParams& params, const ExtRational& tau, const SlopeSet& expected,
                              const ScanOptions& options = {});

}  // namespace cabling
