// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "isc/audio/waveform.hpp"

namespace isc::audio {

/// Band-limited windowed-sinc resampling. Output length is
/// round(input_length * target_rate / input_rate). Identity (bit-exact copy)
/// when rates already match.
Waveform resample(const Waveform& wave, int target_rate);

/// Peak normalization: scales by a single positive constant so that
/// max |sample| == 1. Throws DegenerateSignal when the peak is below 1e-8.
Waveform normalize_amplitude(const Waveform& wave);

struct SegmentMeta {
  std::string subject_id;
  std::string recording_id;
  DatasetTag dataset = DatasetTag::synthetic;
};

/// Cuts one LabeledSegment per annotation. Sample ranges are
/// [floor(start_s*rate), floor(end_s*rate)), labels preserved.
std::vector<LabeledSegment> segment_recording(
    const Waveform& recording, const std::vector<Annotation>& annotations,
    const SegmentMeta& meta);

/// Full preprocessing for one cut segment: resample to 16 kHz, peak-normalize,
/// reject segments shorter than 25 ms. Throws DegenerateSignal on rejects.
Waveform preprocess_segment(const Waveform& wave);

}  // namespace isc::audio
