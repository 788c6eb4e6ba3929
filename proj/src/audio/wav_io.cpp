// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#include "isc/audio/wav_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace isc::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

// Walks RIFF chunks until the data chunk; fills fmt on the way.
// Returns the byte offset and size of the data payload.
void parse_header(std::istream& in, const std::string& path, FmtChunk& fmt,
                  std::uint32_t& data_size) {
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw UnreadableAudio(path + ": not a RIFF file");
  read_le<std::uint32_t>(in);
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw UnreadableAudio(path + ": not a WAVE file");

  bool have_fmt = false;
  while (in) {
    in.read(tag, 4);
    if (!in) break;
    const auto chunk_size = read_le<std::uint32_t>(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      fmt.format = read_le<std::uint16_t>(in);
      fmt.channels = read_le<std::uint16_t>(in);
      fmt.sample_rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      fmt.bits_per_sample = read_le<std::uint16_t>(in);
      if (chunk_size > 16) in.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw UnreadableAudio(path + ": data before fmt chunk");
      data_size = chunk_size;
      return;
    } else {
      // Chunks are word-aligned.
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw UnreadableAudio(path + ": no data chunk");
}

void validate_fmt(const FmtChunk& fmt, const std::string& path) {
  if (fmt.channels == 0 || fmt.sample_rate == 0)
    throw UnreadableAudio(path + ": malformed fmt chunk");
  const bool pcm16 = fmt.format == kFormatPcm && fmt.bits_per_sample == 16;
  const bool f32 = fmt.format == kFormatFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !f32)
    throw UnreadableAudio(path + ": unsupported encoding (format " +
                          std::to_string(fmt.format) + ", " +
                          std::to_string(fmt.bits_per_sample) + " bit)");
}

}  // namespace

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableAudio(path.string() + ": cannot open");
  FmtChunk fmt;
  std::uint32_t data_size = 0;
  parse_header(in, path.string(), fmt, data_size);
  validate_fmt(fmt, path.string());

  const std::size_t bytes_per_sample = fmt.bits_per_sample / 8;
  const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  const std::size_t frames = data_size / frame_bytes;

  std::vector<char> raw(data_size);
  in.read(raw.data(), static_cast<std::streamsize>(data_size));
  if (static_cast<std::uint32_t>(in.gcount()) != data_size)
    throw UnreadableAudio(path.string() + ": truncated data chunk");

  Waveform wave;
  wave.sample_rate = static_cast<int>(fmt.sample_rate);
  wave.samples.resize(frames);
  const double inv_channels = 1.0 / fmt.channels;
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t c = 0; c < fmt.channels; ++c) {
      const char* p = raw.data() + f * frame_bytes + c * bytes_per_sample;
      if (fmt.format == kFormatPcm) {
        std::int16_t v;
        std::memcpy(&v, p, 2);
        acc += static_cast<double>(v) / 32768.0;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        acc += static_cast<double>(v);
      }
    }
    wave.samples[f] = acc * inv_channels;
  }
  return wave;
}

double wav_duration_s(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableAudio(path.string() + ": cannot open");
  FmtChunk fmt;
  std::uint32_t data_size = 0;
  parse_header(in, path.string(), fmt, data_size);
  validate_fmt(fmt, path.string());
  const std::size_t frame_bytes = (fmt.bits_per_sample / 8) * fmt.channels;
  return static_cast<double>(data_size / frame_bytes) / fmt.sample_rate;
}

void write_wav(const std::filesystem::path& path, const Waveform& wave,
               WavEncoding encoding) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UnreadableAudio(path.string() + ": cannot open for writing");

  const bool f32 = encoding == WavEncoding::float32;
  const std::uint16_t bits = f32 ? 32 : 16;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(wave.samples.size() * (bits / 8));
  // fmt (24) + fact (12, float only) + data header (8).
  const std::uint32_t riff_size = 4 + 24 + (f32 ? 12 : 0) + 8 + data_size;

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, riff_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, f32 ? kFormatFloat : kFormatPcm);
  write_le<std::uint16_t>(out, 1);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(wave.sample_rate));
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(wave.sample_rate) *
                                   (bits / 8));
  write_le<std::uint16_t>(out, bits / 8);
  write_le<std::uint16_t>(out, bits);
  if (f32) {
    out.write("fact", 4);
    write_le<std::uint32_t>(out, 4);
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(wave.samples.size()));
  }
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_size);
  for (double s : wave.samples) {
    if (f32) {
      const float v = static_cast<float>(s);
      std::uint32_t bits32;
      std::memcpy(&bits32, &v, 4);
      write_le<std::uint32_t>(out, bits32);
    } else {
      const double clamped = std::clamp(s, -1.0, 1.0);
      const auto v = static_cast<std::int16_t>(
          std::lrint(clamped * 32767.0));
      write_le<std::uint16_t>(out, static_cast<std::uint16_t>(v));
    }
  }
  if (!out) throw UnreadableAudio(path.string() + ": write failed");
}

}  // namespace isc::audio
