// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "isc/corpus/manifest.hpp"

namespace isc::corpus {

/// Budget schedule used by the adaptation sweep, in seconds.
inline const std::vector<double>& default_budget_schedule() {
  static const std::vector<double> k = {270.0, 120.0, 60.0, 30.0, 15.0};
  return k;
}

/// Greedy class-stratified subsampling under a duration budget.
///
/// Segments are shuffled per class with the seed and interleaved
/// proportionally to class frequency into one deterministic order; the
/// prefix is taken until the running total reaches the budget. The result
/// never exceeds budget_s plus one segment duration, and subsets are
/// monotone in the budget for a fixed seed.
///
/// Returns indices into `records`.
std::vector<int> subsample_budget(const std::vector<SegmentRecord>& records,
                                  double budget_s, std::uint64_t seed);

}  // namespace isc::corpus
