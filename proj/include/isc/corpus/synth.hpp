// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "isc/corpus/manifest.hpp"

namespace isc::corpus {

enum class SynthDomain { dpi_like, mdi_like };

std::string to_token(SynthDomain d);
SynthDomain synth_domain_from_token(const std::string& token);

/// Configuration of the seeded synthetic inhaler-sound corpus. Identical
/// config and seed produce a bit-identical dataset tree.
struct SynthConfig {
  SynthDomain domain = SynthDomain::dpi_like;
  int n_subjects = 7;
  int n_recordings_per_subject = 10;
  std::uint64_t seed = 1;
  int sample_rate = 16000;
  // Added to the per-class band centers, Hz.
  std::map<audio::EventClass, double> band_offset_hz;
};

/// Generates the corpus under `root` in the real-dataset layout
/// (<root>/<subject>/<recording>.wav + .jsonl) and returns its manifest.
///
/// Each recording holds one actuation, one exhalation and one inhalation:
///   actuation  dpi-like: 40-120 ms sum of 2-4 decaying sinusoids in the
///              800-2000 Hz band; mdi-like: a broadband click under 20 ms
///              (annotated with a short context window)
///   exhalation 0.8-2 s banded noise around 200-500 Hz, falling envelope
///   inhalation 1-2.5 s banded noise, 400-900 Hz (dpi-like) or
///              1200-2000 Hz (mdi-like), rise-fall envelope
/// with per-subject parameter offsets and a -40 dB background noise floor.
CorpusManifest synth_generate(const SynthConfig& config,
                              const std::filesystem::path& root);

}  // namespace isc::corpus
