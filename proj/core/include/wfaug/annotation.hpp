/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "wfaug/catalog.hpp"

namespace wfaug {

/// Per-frame fractional tool annotations of one video, values in [0,1].
struct RawTrack {
  std::string video_id;
  std::vector<std::vector<double>> rows;  // rows[frame][tool]

  std::int64_t frame_count() const { return static_cast<std::int64_t>(rows.size()); }
};

/// Per-frame single-class annotation of one video.
struct LabelTrack {
  std::string video_id;
  std::vector<ClassId> frames;

  std::int64_t frame_count() const { return static_cast<std::int64_t>(frames.size()); }
};

/// Maximal constant-class span, half-open [begin, end).
struct Run {
  ClassId cls;
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - begin; }
  bool operator==(const Run&) const = default;
};

/// Parses a per-video annotation CSV. Expected layout: a header row
/// "frame,<tool>,<tool>,..." covering every catalog tool (any column order),
/// then one row per frame "frame_index,v_1,...,v_T" with values in [0,1] and
/// frame indices contiguous ascending from 0 or 1. Indices are normalized to
/// 0-based. Errors name the offending line.
RawTrack parse_raw_track(const std::filesystem::path& path, const ClassCatalog& catalog);
RawTrack parse_raw_track(std::istream& in, const ClassCatalog& catalog, std::string video_id,
                         const std::string& origin = "<stream>");

/// v > threshold -> true (strict inequality).
std::vector<std::vector<bool>> binarize(const RawTrack& raw, double threshold = 0.5);

/// Binarizes and maps each frame's active tool set through the catalog.
/// A frame whose active set is not in the catalog is an error naming the
/// frame and the set.
LabelTrack to_label_track(const RawTrack& raw, const ClassCatalog& catalog, double threshold = 0.5);

/// Maximal constant-class runs; spans partition [0, frame_count).
std::vector<Run> runs(const LabelTrack& track);

/// Writes a track in the annotation CSV format (0/1 values from each frame
/// class's tool set); parse + to_label_track round-trips exactly.
void write_label_track_csv(const LabelTrack& track, const ClassCatalog& catalog,
                           const std::filesystem::path& path);
std::string label_track_to_csv(const LabelTrack& track, const ClassCatalog& catalog);

/// Parses every *.csv in a directory (sorted by filename); video id = stem.
std::vector<LabelTrack> load_label_tracks(const std::filesystem::path& dir, const ClassCatalog& catalog,
                                          double threshold = 0.5);

}  // namespace wfaug
