// Copyright (c) 2026, the isc authors
// SPDX-License-Identifier: Apache-2.0

#include "isc/corpus/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isc/audio/ops.hpp"
#include "isc/audio/wav_io.hpp"

namespace isc::corpus {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::vector<std::string> CorpusManifest::subjects() const {
  std::set<std::string> s;
  for (const auto& e : entries) s.insert(e.subject_id);
  return {s.begin(), s.end()};
}

std::map<audio::EventClass, int> CorpusManifest::class_counts() const {
  std::map<audio::EventClass, int> counts;
  for (audio::EventClass c : audio::all_classes()) counts[c] = 0;
  for (const auto& e : entries) counts[e.label]++;
  return counts;
}

int CorpusManifest::recording_count() const {
  std::set<std::pair<std::string, std::string>> recs;
  for (const auto& e : entries) recs.insert({e.subject_id, e.recording_id});
  return static_cast<int>(recs.size());
}

std::vector<audio::Annotation> read_annotations(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingAnnotation(file.string() + ": cannot open");
  std::vector<audio::Annotation> annotations;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
      audio::Annotation a;
      a.start_s = j.at("start_s").get<double>();
      a.end_s = j.at("end_s").get<double>();
      a.label = audio::event_class_from_token(j.at("label").get<std::string>());
      annotations.push_back(a);
    } catch (const json::exception& e) {
      throw BadAnnotation(file.string() + ":" + std::to_string(line_no) +
                          ": " + e.what());
    }
  }
  // Annotations within one recording must be sorted and non-overlapping.
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const auto& a = annotations[i];
    if (a.start_s < 0 || a.end_s <= a.start_s)
      throw BadAnnotation(file.string() + ": invalid range [" +
                          std::to_string(a.start_s) + ", " +
                          std::to_string(a.end_s) + ")");
    if (i > 0 && a.start_s < annotations[i - 1].end_s)
      throw BadAnnotation(file.string() +
                          ": annotations overlap or are out of order");
  }
  return annotations;
}

CorpusManifest load_manifest(const fs::path& root, audio::DatasetTag dataset) {
  if (!fs::is_directory(root))
    throw audio::UnreadableAudio(root.string() + ": not a directory");

  CorpusManifest manifest;
  manifest.dataset = dataset;

  std::vector<fs::path> wavs;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".wav")
      wavs.push_back(entry.path());
  }
  std::sort(wavs.begin(), wavs.end());
  if (wavs.empty())
    throw audio::UnreadableAudio(root.string() + ": no audio files found");

  for (const fs::path& wav : wavs) {
    fs::path ann = wav;
    ann.replace_extension(".jsonl");
    if (!fs::exists(ann))
      throw MissingAnnotation(wav.string() + ": no matching annotation file");

    const std::string subject = wav.parent_path().filename().string();
    const std::string recording = wav.stem().string();
    const double duration = audio::wav_duration_s(wav);

    for (const audio::Annotation& a : read_annotations(ann)) {
      if (a.end_s > duration + 1e-9)
        throw BadAnnotation(ann.string() + ": annotation ends at " +
                            std::to_string(a.end_s) + " s but recording is " +
                            std::to_string(duration) + " s");
      SegmentRecord rec;
      rec.path = wav;
      rec.subject_id = subject;
      rec.recording_id = recording;
      rec.start_s = a.start_s;
      rec.end_s = a.end_s;
      rec.label = a.label;
      manifest.entries.push_back(std::move(rec));
    }
  }

  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const SegmentRecord& a, const SegmentRecord& b) {
              return std::tie(a.subject_id, a.recording_id, a.start_s) <
                     std::tie(b.subject_id, b.recording_id, b.start_s);
            });

  // (subject, recording, start) triples must be unique.
  for (std::size_t i = 1; i < manifest.entries.size(); ++i) {
    const auto& a = manifest.entries[i - 1];
    const auto& b = manifest.entries[i];
    if (a.subject_id == b.subject_id && a.recording_id == b.recording_id &&
        a.start_s == b.start_s)
      throw BadAnnotation("duplicate segment " + a.subject_id + "/" +
                          a.recording_id + " @ " + std::to_string(a.start_s));
  }
  return manifest;
}

namespace {

const std::map<audio::DatasetTag, std::map<audio::EventClass, int>>&
published_counts() {
  using EC = audio::EventClass;
  static const std::map<audio::DatasetTag, std::map<EC, int>> k = {
      {audio::DatasetTag::dpi_watch,
       {{EC::actuation, 68}, {EC::exhalation, 123}, {EC::inhalation, 71}}},
      // Noise segments excluded.
      {audio::DatasetTag::rda,
       {{EC::actuation, 193}, {EC::exhalation, 620}, {EC::inhalation, 319}}},
  };
  return k;
}

}  // namespace

CountReport validate_counts(const CorpusManifest& manifest,
                            audio::DatasetTag expected, bool strict) {
  CountReport report;
  report.actual = manifest.class_counts();
  const auto it = published_counts().find(expected);
  if (it == published_counts().end()) {
    report.message = "no published counts for dataset '" +
                     audio::to_token(expected) + "'; skipping validation";
    return report;
  }
  report.has_expectation = true;
  report.expected = it->second;
  std::ostringstream deltas;
  for (audio::EventClass c : audio::all_classes()) {
    const int diff = report.actual.at(c) - report.expected.at(c);
    if (diff != 0) {
      report.pass = false;
      deltas << (deltas.tellp() > 0 ? ", " : "") << audio::to_token(c) << ": "
             << (diff > 0 ? "+" : "") << diff;
    }
  }
  if (report.pass) {
    report.message = "class counts match published values for '" +
                     audio::to_token(expected) + "'";
  } else {
    report.message = "count mismatch for '" + audio::to_token(expected) +
                     "' (" + deltas.str() + ")";
    if (strict) throw CountMismatch(report.message);
  }
  return report;
}

void write_manifest(const CorpusManifest& manifest, const fs::path& file) {
  std::ofstream out(file, std::ios::trunc);
  if (!out)
    throw audio::UnreadableAudio(file.string() + ": cannot open for writing");
  for (const auto& e : manifest.entries) {
    json j;
    j["path"] = e.path.generic_string();
    j["subject_id"] = e.subject_id;
    j["recording_id"] = e.recording_id;
    j["start_s"] = e.start_s;
    j["end_s"] = e.end_s;
    j["label"] = audio::to_token(e.label);
    j["dataset"] = audio::to_token(manifest.dataset);
    out << j.dump() << "\n";
  }
}

CorpusManifest read_manifest(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw audio::UnreadableAudio(file.string() + ": cannot open");
  CorpusManifest manifest;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line);
    SegmentRecord rec;
    rec.path = j.at("path").get<std::string>();
    rec.subject_id = j.at("subject_id").get<std::string>();
    rec.recording_id = j.at("recording_id").get<std::string>();
    rec.start_s = j.at("start_s").get<double>();
    rec.end_s = j.at("end_s").get<double>();
    rec.label = audio::event_class_from_token(j.at("label").get<std::string>());
    if (first) {
      manifest.dataset =
          audio::dataset_tag_from_token(j.at("dataset").get<std::string>());
      first = false;
    }
    manifest.entries.push_back(std::move(rec));
  }
  return manifest;
}

audio::LabeledSegment load_segment(const SegmentRecord& record,
                                   audio::DatasetTag dataset) {
  const audio::Waveform recording = audio::read_wav(record.path);
  const audio::Waveform at_rate =
      audio::resample(recording, audio::kTargetSampleRate);
  audio::SegmentMeta meta{record.subject_id, record.recording_id, dataset};
  audio::Annotation a{record.start_s, record.end_s, record.label};
  auto segments = audio::segment_recording(at_rate, {a}, meta);
  audio::LabeledSegment seg = std::move(segments.front());
  if (seg.wave.samples.size() < audio::kMinSegmentSamples)
    throw audio::DegenerateSignal(record.path.string() + " @ " +
                                  std::to_string(record.start_s) +
                                  ": segment below the 25 ms minimum");
  seg.wave = audio::normalize_amplitude(seg.wave);
  return seg;
}

std::vector<audio::LabeledSegment> load_segments(
    const CorpusManifest& manifest, const std::vector<std::string>& subjects) {
  const std::set<std::string> wanted(subjects.begin(), subjects.end());
  std::vector<audio::LabeledSegment> out;
  // Recordings are typically annotated several times; cache the resampled
  // recording across consecutive entries of the same file.
  fs::path cached_path;
  audio::Waveform cached;
  for (const auto& rec : manifest.entries) {
    if (!wanted.empty() && !wanted.count(rec.subject_id)) continue;
    if (rec.path != cached_path) {
      cached = audio::resample(audio::read_wav(rec.path),
                               audio::kTargetSampleRate);
      cached_path = rec.path;
    }
    audio::SegmentMeta meta{rec.subject_id, rec.recording_id,
                            manifest.dataset};
    audio::Annotation a{rec.start_s, rec.end_s, rec.label};
    try {
      auto segments = audio::segment_recording(cached, {a}, meta);
      audio::LabeledSegment seg = std::move(segments.front());
      if (seg.wave.samples.size() < audio::kMinSegmentSamples) continue;
      seg.wave = audio::normalize_amplitude(seg.wave);
      out.push_back(std::move(seg));
    } catch (const audio::DegenerateSignal&) {
      continue;
    }
  }
  return out;
}

}  // namespace isc::corpus
