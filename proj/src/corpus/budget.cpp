// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#include "isc/corpus/budget.hpp"

#include <algorithm>
#include <map>

#include "isc/common/rng.hpp"

namespace isc::corpus {

std::vector<int> subsample_budget(const std::vector<SegmentRecord>& records,
                                  double budget_s, std::uint64_t seed) {
  if (records.empty() || budget_s <= 0) return {};

  std::map<audio::EventClass, std::vector<int>> by_class;
  for (int i = 0; i < static_cast<int>(records.size()); ++i)
    by_class[records[i].label].push_back(i);

  for (auto& [cls, indices] : by_class) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(cls)));
    rng.shuffle(indices);
  }

  // Stride-scheduled interleave proportional to class frequency. The full
  // order is independent of the budget, so smaller budgets are prefixes of
  // larger ones (monotone subsets for a fixed seed).
  struct Lane {
    const std::vector<int>* items;
    double weight;
    std::size_t next = 0;
    double virtual_time = 0.0;
  };
  std::vector<Lane> lanes;
  for (auto& [cls, indices] : by_class)
    lanes.push_back(
        {&indices,
         static_cast<double>(indices.size()) / records.size()});

  std::vector<int> order;
  order.reserve(records.size());
  while (order.size() < records.size()) {
    Lane* best = nullptr;
    for (auto& lane : lanes) {
      if (lane.next >= lane.items->size()) continue;
      const double t = lane.virtual_time + 1.0 / lane.weight;
      if (!best || t < best->virtual_time + 1.0 / best->weight) best = &lane;
    }
    if (!best) break;
    best->virtual_time += 1.0 / best->weight;
    order.push_back((*best->items)[best->next++]);
  }

  std::vector<int> subset;
  double total = 0.0;
  for (int idx : order) {
    if (total >= budget_s) break;
    subset.push_back(idx);
    total += records[idx].duration_s();
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

}  // namespace isc::corpus
