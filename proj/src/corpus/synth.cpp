// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#include "isc/corpus/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isc/audio/ops.hpp"
#include "isc/audio/wav_io.hpp"
#include "isc/common/rng.hpp"

namespace isc::corpus {

namespace fs = std::filesystem;
using audio::EventClass;

std::string to_token(SynthDomain d) {
  return d == SynthDomain::dpi_like ? "dpi-like" : "mdi-like";
}

SynthDomain synth_domain_from_token(const std::string& token) {
  if (token == "dpi-like") return SynthDomain::dpi_like;
  if (token == "mdi-like") return SynthDomain::mdi_like;
  throw audio::UnknownLabel("unknown synth domain: '" + token + "'");
}

namespace {

// RBJ constant-peak band-pass biquad.
struct Biquad {
  double b0, b1, b2, a1, a2;
  double z1 = 0.0, z2 = 0.0;

  static Biquad bandpass(double f0, double q, double fs) {
    const double w = 2.0 * M_PI * f0 / fs;
    const double alpha = std::sin(w) / (2.0 * q);
    const double a0 = 1.0 + alpha;
    Biquad f{};
    f.b0 = alpha / a0;
    f.b1 = 0.0;
    f.b2 = -alpha / a0;
    f.a1 = -2.0 * std::cos(w) / a0;
    f.a2 = (1.0 - alpha) / a0;
    return f;
  }

  double process(double x) {
    const double y = b0 * x + z1;
    z1 = b1 * x - a1 * y + z2;
    z2 = b2 * x - a2 * y;
    return y;
  }
};

std::vector<double> banded_noise(Rng& rng, int n, double center_hz, double q,
                                 double fs) {
  std::vector<double> noise(n);
  for (double& s : noise) s = rng.normal();
  Biquad f1 = Biquad::bandpass(center_hz, q, fs);
  Biquad f2 = Biquad::bandpass(center_hz, q, fs);
  double peak = 1e-12;
  for (double& s : noise) {
    s = f2.process(f1.process(s));
    peak = std::max(peak, std::abs(s));
  }
  for (double& s : noise) s /= peak;
  return noise;
}

struct EventSound {
  std::vector<double> samples;
  double annotated_s;  // annotation window, >= sound duration
};

struct DomainParams {
  double exhale_center;
  double inhale_center;
  double actuation_lo, actuation_hi;  // dpi partial band
};

EventSound make_actuation(Rng& rng, const SynthConfig& cfg, double offset_hz,
                          double subject_scale) {
  const double fs = cfg.sample_rate;
  EventSound ev;
  if (cfg.domain == SynthDomain::dpi_like) {
    const double dur = rng.uniform(0.040, 0.120);
    const int n = static_cast<int>(dur * fs);
    ev.samples.assign(n, 0.0);
    const int n_partials = 2 + static_cast<int>(rng.uniform_int(3));
    for (int p = 0; p < n_partials; ++p) {
      const double freq =
          std::clamp(rng.uniform(800.0, 2000.0) * subject_scale + offset_hz,
                     400.0, 7000.0);
      const double amp = rng.uniform(0.4, 1.0) / n_partials;
      const double tau = rng.uniform(0.008, 0.030);
      const double phase = rng.uniform(0.0, 2.0 * M_PI);
      for (int i = 0; i < n; ++i) {
        const double t = i / fs;
        ev.samples[i] +=
            amp * std::exp(-t / tau) * std::sin(2.0 * M_PI * freq * t + phase);
      }
    }
    ev.annotated_s = dur;
  } else {
    // Broadband click, under 20 ms, annotated with a short context window
    // the way a human annotator would mark it.
    const double click_dur = rng.uniform(0.008, 0.020);
    const double window = rng.uniform(0.060, 0.120);
    const int n = static_cast<int>(window * fs);
    const int n_click = static_cast<int>(click_dur * fs);
    ev.samples.assign(n, 0.0);
    const double tau = rng.uniform(0.002, 0.004);
    for (int i = 0; i < n_click; ++i) {
      const double t = i / fs;
      ev.samples[i] = rng.normal() * std::exp(-t / tau);
    }
    ev.annotated_s = window;
  }
  double peak = 1e-12;
  for (double s : ev.samples) peak = std::max(peak, std::abs(s));
  for (double& s : ev.samples) s *= 0.9 / peak;
  return ev;
}

EventSound make_breath(Rng& rng, const SynthConfig& cfg, bool inhale,
                       double center_hz) {
  const double fs = cfg.sample_rate;
  const double dur =
      inhale ? rng.uniform(1.0, 2.5) : rng.uniform(0.8, 2.0);
  const int n = static_cast<int>(dur * fs);
  const double q = rng.uniform(2.5, 4.0);
  EventSound ev;
  ev.samples = banded_noise(rng, n, center_hz, q, fs);
  ev.annotated_s = dur;

  // Slow random amplitude wobble so the envelope is a weaker cue than the
  // band placement.
  const double wobble_hz = rng.uniform(1.0, 3.0);
  const double wobble_amt = rng.uniform(0.05, 0.20);
  const double wobble_phase = rng.uniform(0.0, 2.0 * M_PI);

  if (inhale) {
    // Rise-fall: peak somewhere in the middle.
    const double peak_at = rng.uniform(0.35, 0.65);
    for (int i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) / n;
      const double env = x < peak_at
                             ? 0.15 + 0.85 * std::sin(0.5 * M_PI * x / peak_at)
                             : 0.15 + 0.85 * std::cos(0.5 * M_PI * (x - peak_at) /
                                                      (1.0 - peak_at));
      const double w =
          1.0 + wobble_amt * std::sin(2.0 * M_PI * wobble_hz * i / fs +
                                      wobble_phase);
      ev.samples[i] *= 0.9 * env * w;
    }
  } else {
    // Falling energy with a short attack.
    const double decay = rng.uniform(1.2, 2.5);
    const int attack = static_cast<int>(0.03 * fs);
    for (int i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) / n;
      double env = 0.2 + 0.8 * std::exp(-decay * x);
      if (i < attack) env *= static_cast<double>(i) / attack;
      const double w =
          1.0 + wobble_amt * std::sin(2.0 * M_PI * wobble_hz * i / fs +
                                      wobble_phase);
      ev.samples[i] *= 0.9 * env * w;
    }
  }
  return ev;
}

double class_offset(const SynthConfig& cfg, EventClass c) {
  const auto it = cfg.band_offset_hz.find(c);
  return it == cfg.band_offset_hz.end() ? 0.0 : it->second;
}

}  // namespace

CorpusManifest synth_generate(const SynthConfig& config, const fs::path& root) {
  if (config.n_subjects < 1 || config.n_recordings_per_subject < 1 ||
      config.sample_rate <= 0)
    throw std::invalid_argument("synth_generate: invalid config");

  const DomainParams dp = config.domain == SynthDomain::dpi_like
                              ? DomainParams{350.0, 650.0, 800.0, 2000.0}
                              : DomainParams{350.0, 1600.0, 0.0, 0.0};
  const double fs = config.sample_rate;

  CorpusManifest manifest;
  manifest.dataset = audio::DatasetTag::synthetic;

  fs::create_directories(root);

  for (int s = 0; s < config.n_subjects; ++s) {
    std::ostringstream subj_name;
    subj_name << "s" << (s + 1 < 10 ? "0" : "") << (s + 1);
    const std::string subject = subj_name.str();
    fs::create_directories(root / subject);

    Rng subject_rng(Rng::derive(config.seed, 7001 + s));
    const double subject_scale = subject_rng.uniform(0.92, 1.08);
    const double subject_exhale =
        dp.exhale_center * subject_rng.uniform(0.85, 1.15) +
        class_offset(config, EventClass::exhalation);
    const double subject_inhale =
        dp.inhale_center * subject_rng.uniform(0.90, 1.10) +
        class_offset(config, EventClass::inhalation);
    const double subject_act_offset =
        class_offset(config, EventClass::actuation);

    for (int r = 0; r < config.n_recordings_per_subject; ++r) {
      std::ostringstream rec_name;
      rec_name << "r" << (r + 1 < 10 ? "0" : "") << (r + 1);
      const std::string recording = rec_name.str();

      Rng rng(Rng::derive(Rng::derive(config.seed, 7001 + s), 100 + r));

      std::vector<std::pair<EventClass, EventSound>> events;
      events.emplace_back(
          EventClass::actuation,
          make_actuation(rng, config, subject_act_offset, subject_scale));
      events.emplace_back(
          EventClass::exhalation,
          make_breath(rng, config, false,
                      subject_exhale * rng.uniform(0.95, 1.05)));
      events.emplace_back(
          EventClass::inhalation,
          make_breath(rng, config, true,
                      subject_inhale * rng.uniform(0.97, 1.03)));

      std::vector<double> samples;
      std::vector<audio::Annotation> annotations;
      auto gap = [&] {
        const int n = static_cast<int>(rng.uniform(0.3, 0.8) * fs);
        samples.insert(samples.end(), n, 0.0);
      };
      gap();
      for (auto& [label, ev] : events) {
        const double start = samples.size() / fs;
        samples.insert(samples.end(), ev.samples.begin(), ev.samples.end());
        annotations.push_back({start, start + ev.annotated_s, label});
        gap();
      }

      // Background noise floor at -40 dB relative to signal peak.
      double peak = 1e-12;
      for (double v : samples) peak = std::max(peak, std::abs(v));
      const double floor_amp = peak * std::pow(10.0, -40.0 / 20.0);
      for (double& v : samples) v += floor_amp * rng.normal();

      audio::Waveform wave;
      wave.sample_rate = config.sample_rate;
      wave.samples = std::move(samples);
      const fs::path wav_path = root / subject / (recording + ".wav");
      audio::write_wav(wav_path, wave, audio::WavEncoding::float32);

      std::ofstream ann(root / subject / (recording + ".jsonl"),
                        std::ios::trunc);
      for (const auto& a : annotations) {
        nlohmann::json j;
        j["start_s"] = a.start_s;
        j["end_s"] = a.end_s;
        j["label"] = audio::to_token(a.label);
        ann << j.dump() << "\n";
        SegmentRecord rec;
        rec.path = wav_path;
        rec.subject_id = subject;
        rec.recording_id = recording;
        rec.start_s = a.start_s;
        rec.end_s = a.end_s;
        rec.label = a.label;
        manifest.entries.push_back(std::move(rec));
      }
    }
  }

  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const SegmentRecord& a, const SegmentRecord& b) {
              return std::tie(a.subject_id, a.recording_id, a.start_s) <
                     std::tie(b.subject_id, b.recording_id, b.start_s);
            });
  return manifest;
}

}  // namespace isc::corpus
