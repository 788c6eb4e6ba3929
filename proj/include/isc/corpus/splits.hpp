// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "isc/corpus/manifest.hpp"

namespace isc::corpus {

struct TooFewSubjects : std::runtime_error {
  explicit TooFewSubjects(const std::string& what)
      : std::runtime_error(what) {}
};

struct ClassTooSmall : std::runtime_error {
  explicit ClassTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// Subject-level partition. The three sets are pairwise disjoint.
struct SplitPlan {
  std::set<std::string> train;
  std::set<std::string> validation;
  std::set<std::string> test;
};

/// Subject-partitioned single split: subjects ordered by id, first block
/// for training, middle block for validation, final subject(s) for test.
/// With seven subjects this is 3 / 3 / 1.
SplitPlan split_holdout(const CorpusManifest& manifest);

/// Segment-level stratified split indices into the manifest entries:
/// per class, round(train_frac * n) in train (capped to keep validation
/// non-empty), the rest in validation. Seeded shuffle, deterministic.
struct StratifiedSplit {
  std::vector<int> train_indices;
  std::vector<int> validation_indices;
};
StratifiedSplit split_stratified(const CorpusManifest& manifest,
                                 double train_frac, std::uint64_t seed);

/// One fold per subject; in fold i that subject is the sole test subject,
/// the validation subject rotates over the remaining ones by fold index.
std::vector<SplitPlan> make_loso_folds(const CorpusManifest& manifest);

}  // namespace isc::corpus
