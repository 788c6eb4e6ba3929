// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "isc/audio/waveform.hpp"

namespace isc::corpus {

struct MissingAnnotation : std::runtime_error {
  explicit MissingAnnotation(const std::string& what)
      : std::runtime_error(what) {}
};

struct BadAnnotation : std::runtime_error {
  explicit BadAnnotation(const std::string& what) : std::runtime_error(what) {}
};

struct CountMismatch : std::runtime_error {
  explicit CountMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// One annotated segment of one recording on disk.
struct SegmentRecord {
  std::filesystem::path path;  // audio file containing the segment
  std::string subject_id;
  std::string recording_id;
  double start_s = 0.0;
  double end_s = 0.0;
  audio::EventClass label = audio::EventClass::actuation;

  double duration_s() const { return end_s - start_s; }
};

/// Declarative index of every annotated segment of a dataset.
struct CorpusManifest {
  std::vector<SegmentRecord> entries;
  audio::DatasetTag dataset = audio::DatasetTag::synthetic;

  std::vector<std::string> subjects() const;  // sorted, unique
  std::map<audio::EventClass, int> class_counts() const;
  int recording_count() const;
};

/// Walks a dataset tree (<root>/<subject>/<recording>.wav + .jsonl) and
/// indexes every annotated segment. Entry order is lexicographic by
/// (subject, recording, start_s).
CorpusManifest load_manifest(const std::filesystem::path& root,
                             audio::DatasetTag dataset);

struct CountReport {
  bool pass = true;
  bool has_expectation = false;
  std::map<audio::EventClass, int> expected;
  std::map<audio::EventClass, int> actual;
  std::string message;
};

/// Checks class counts against the published counts for the named dataset.
/// Datasets without published counts always pass. `strict` additionally
/// throws CountMismatch on failure.
CountReport validate_counts(const CorpusManifest& manifest,
                            audio::DatasetTag expected, bool strict = false);

/// JSON-lines round trip. Field names: path, subject_id, recording_id,
/// start_s, end_s, label, dataset.
void write_manifest(const CorpusManifest& manifest,
                    const std::filesystem::path& file);
CorpusManifest read_manifest(const std::filesystem::path& file);

/// Loads, cuts and preprocesses one segment: resample to 16 kHz, cut the
/// annotated range, peak-normalize, reject sub-25 ms results.
audio::LabeledSegment load_segment(const SegmentRecord& record,
                                   audio::DatasetTag dataset);

/// Loads every segment of the given subjects (all subjects when empty),
/// silently skipping degenerate rejects. Order follows the manifest.
std::vector<audio::LabeledSegment> load_segments(
    const CorpusManifest& manifest,
    const std::vector<std::string>& subjects = {});

/// Parses one annotation JSONL file (fields start_s, end_s, label).
std::vector<audio::Annotation> read_annotations(
    const std::filesystem::path& file);

}  // namespace isc::corpus
