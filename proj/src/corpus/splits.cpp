// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#include "isc/corpus/splits.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "isc/common/rng.hpp"

namespace isc::corpus {

SplitPlan split_holdout(const CorpusManifest& manifest) {
  const std::vector<std::string> subjects = manifest.subjects();
  const int n = static_cast<int>(subjects.size());
  if (n < 3)
    throw TooFewSubjects("hold-out split needs at least 3 subjects, have " +
                         std::to_string(n));
  // 3/3/1 at seven subjects; proportional with at least one subject per
  // partition otherwise.
  int train_n = std::max(1, (3 * n) / 7);
  int val_n = std::max(1, (3 * n) / 7);
  while (n - train_n - val_n < 1) {
    if (train_n >= val_n && train_n > 1)
      --train_n;
    else
      --val_n;
  }
  SplitPlan plan;
  for (int i = 0; i < n; ++i) {
    if (i < train_n)
      plan.train.insert(subjects[i]);
    else if (i < train_n + val_n)
      plan.validation.insert(subjects[i]);
    else
      plan.test.insert(subjects[i]);
  }
  return plan;
}

StratifiedSplit split_stratified(const CorpusManifest& manifest,
                                 double train_frac, std::uint64_t seed) {
  std::map<audio::EventClass, std::vector<int>> by_class;
  for (int i = 0; i < static_cast<int>(manifest.entries.size()); ++i)
    by_class[manifest.entries[i].label].push_back(i);

  for (audio::EventClass c : audio::all_classes()) {
    const auto it = by_class.find(c);
    if (it == by_class.end() || it->second.size() < 2)
      throw ClassTooSmall("class '" + audio::to_token(c) +
                          "' has fewer than 2 segments");
  }

  StratifiedSplit split;
  for (auto& [cls, indices] : by_class) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(cls)));
    rng.shuffle(indices);
    const int n = static_cast<int>(indices.size());
    int train_n = static_cast<int>(std::lround(train_frac * n));
    train_n = std::clamp(train_n, 1, n - 1);  // both sides stay non-empty
    for (int i = 0; i < n; ++i) {
      if (i < train_n)
        split.train_indices.push_back(indices[i]);
      else
        split.validation_indices.push_back(indices[i]);
    }
  }
  std::sort(split.train_indices.begin(), split.train_indices.end());
  std::sort(split.validation_indices.begin(), split.validation_indices.end());
  return split;
}

std::vector<SplitPlan> make_loso_folds(const CorpusManifest& manifest) {
  const std::vector<std::string> subjects = manifest.subjects();
  const int n = static_cast<int>(subjects.size());
  if (n < 3)
    throw TooFewSubjects("LOSO needs at least 3 subjects, have " +
                         std::to_string(n));
  std::vector<SplitPlan> folds;
  folds.reserve(n);
  for (int i = 0; i < n; ++i) {
    SplitPlan fold;
    fold.test.insert(subjects[i]);
    std::vector<std::string> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(subjects[j]);
    // Validation subject rotates with the fold index.
    const int val_pick = i % static_cast<int>(others.size());
    for (int j = 0; j < static_cast<int>(others.size()); ++j) {
      if (j == val_pick)
        fold.validation.insert(others[j]);
      else
        fold.train.insert(others[j]);
    }
    folds.push_back(std::move(fold));
  }
  return folds;
}

}  // namespace isc::corpus
