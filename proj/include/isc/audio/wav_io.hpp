// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "isc/audio/waveform.hpp"

namespace isc::audio {

struct UnreadableAudio : std::runtime_error {
  explicit UnreadableAudio(const std::string& what)
      : std::runtime_error(what) {}
};

enum class WavEncoding { pcm16, float32 };

/// Reads a mono or multi-channel WAV file (PCM 16-bit or IEEE float 32-bit).
/// Multi-channel input is mixed down by averaging channels.
Waveform read_wav(const std::filesystem::path& path);

/// Header-only probe; returns duration in seconds without decoding samples.
double wav_duration_s(const std::filesystem::path& path);

/// Writes a mono WAV file. Deterministic byte output for identical input.
void write_wav(const std::filesystem::path& path, const Waveform& wave,
               WavEncoding encoding = WavEncoding::float32);

}  // namespace isc::audio
