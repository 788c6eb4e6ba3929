// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace isc::audio {

constexpr int kTargetSampleRate = 16000;

// Minimum accepted segment length after preprocessing: 25 ms at 16 kHz,
// which is one encoder receptive field.
constexpr std::size_t kMinSegmentSamples = 400;

/// Mono audio buffer with dimensionless amplitudes in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

enum class EventClass : int { actuation = 0, exhalation = 1, inhalation = 2 };

constexpr int kNumClasses = 3;

/// Class order used everywhere: actuation < exhalation < inhalation.
const std::vector<EventClass>& all_classes();

std::string to_token(EventClass c);
EventClass event_class_from_token(const std::string& token);

enum class DatasetTag { dpi_watch, rda, synthetic };

std::string to_token(DatasetTag tag);
DatasetTag dataset_tag_from_token(const std::string& token);

/// One labeled time range within a recording. Half-open in seconds.
struct Annotation {
  double start_s = 0.0;
  double end_s = 0.0;
  EventClass label = EventClass::actuation;
};

struct LabeledSegment {
  Waveform wave;
  EventClass label = EventClass::actuation;
  std::string subject_id;
  std::string recording_id;
  DatasetTag dataset = DatasetTag::synthetic;
};

struct EmptySignal : std::runtime_error {
  explicit EmptySignal(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSignal : std::runtime_error {
  explicit DegenerateSignal(const std::string& what)
      : std::runtime_error(what) {}
};

struct AnnotationOutOfRange : std::runtime_error {
  explicit AnnotationOutOfRange(const std::string& what)
      : std::runtime_error(what) {}
};

struct UnknownLabel : std::runtime_error {
  explicit UnknownLabel(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isc::audio
