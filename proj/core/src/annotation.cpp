/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wfaug/annotation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wfaug/errors.hpp"
#include "wfaug/io.hpp"

namespace wfaug {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_value(const std::string& field, const std::string& origin, std::int64_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    throw ParseError(origin + ": malformed value '" + field + "' at line " + std::to_string(line_no));
  return v;
}

}  // namespace

RawTrack parse_raw_track(std::istream& in, const ClassCatalog& catalog, std::string video_id,
                         const std::string& origin) {
  std::string line;
  std::int64_t line_no = 0;

  // Header: "frame" followed by every catalog tool, any order.
  if (!std::getline(in, line)) throw ParseError(origin + ": empty file");
  ++line_no;
  const auto header = split_csv(line);
  if (header.empty() || header[0] != "frame")
    throw ParseError(origin + ": header must start with 'frame'");
  const int tool_count = catalog.tool_count();
  if (static_cast<int>(header.size()) - 1 != tool_count)
    throw ParseError(origin + ": header has " + std::to_string(header.size() - 1) + " tool columns, catalog has " +
                     std::to_string(tool_count));
  std::vector<int> column_tool(header.size() - 1, -1);
  std::vector<bool> seen(static_cast<std::size_t>(tool_count), false);
  for (std::size_t i = 1; i < header.size(); ++i) {
    auto tool = catalog.tool_by_name(header[i]);
    if (!tool) throw ParseError(origin + ": unknown tool column '" + header[i] + "'");
    if (seen[static_cast<std::size_t>(tool->value)])
      throw ParseError(origin + ": duplicate tool column '" + header[i] + "'");
    seen[static_cast<std::size_t>(tool->value)] = true;
    column_tool[i - 1] = tool->value;
  }

  RawTrack track;
  track.video_id = std::move(video_id);
  std::int64_t base = -1;  // 0 or 1, fixed by the first row
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (static_cast<int>(fields.size()) != tool_count + 1)
      throw ParseError(origin + ": expected " + std::to_string(tool_count + 1) + " fields, got " +
                       std::to_string(fields.size()) + " at line " + std::to_string(line_no));
    const double raw_index = parse_value(fields[0], origin, line_no);
    const auto index = static_cast<std::int64_t>(raw_index);
    if (static_cast<double>(index) != raw_index)
      throw ParseError(origin + ": non-integer frame index at line " + std::to_string(line_no));
    if (base < 0) {
      if (index != 0 && index != 1)
        throw ParseError(origin + ": frame indices must start at 0 or 1, got " + std::to_string(index) +
                         " at line " + std::to_string(line_no));
      base = index;
    }
    if (index - base != track.frame_count())
      throw ParseError(origin + ": non-contiguous frame index " + std::to_string(index) + " at line " +
                       std::to_string(line_no));
    std::vector<double> row(static_cast<std::size_t>(tool_count), 0.0);
    for (int c = 0; c < tool_count; ++c) {
      const double v = parse_value(fields[static_cast<std::size_t>(c) + 1], origin, line_no);
      if (v < 0.0 || v > 1.0)
        throw ParseError(origin + ": value out of range at line " + std::to_string(line_no));
      row[static_cast<std::size_t>(column_tool[static_cast<std::size_t>(c)])] = v;
    }
    track.rows.push_back(std::move(row));
  }
  if (track.rows.empty()) throw ParseError(origin + ": empty track");
  return track;
}

RawTrack parse_raw_track(const std::filesystem::path& path, const ClassCatalog& catalog) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read annotation file: " + path.string());
  return parse_raw_track(in, catalog, path.stem().string(), path.string());
}

std::vector<std::vector<bool>> binarize(const RawTrack& raw, double threshold) {
  std::vector<std::vector<bool>> out;
  out.reserve(raw.rows.size());
  for (const auto& row : raw.rows) {
    std::vector<bool> bits(row.size());
    for (std::size_t t = 0; t < row.size(); ++t) bits[t] = row[t] > threshold;
    out.push_back(std::move(bits));
  }
  return out;
}

LabelTrack to_label_track(const RawTrack& raw, const ClassCatalog& catalog, double threshold) {
  LabelTrack track;
  track.video_id = raw.video_id;
  track.frames.reserve(raw.rows.size());
  const auto bits = binarize(raw, threshold);
  for (std::size_t f = 0; f < bits.size(); ++f) {
    std::vector<int> active;
    for (std::size_t t = 0; t < bits[f].size(); ++t)
      if (bits[f][t]) active.push_back(static_cast<int>(t));
    auto cls = catalog.class_for_tools(active);
    if (!cls) {
      std::string names;
      for (int t : active) {
        if (!names.empty()) names += " & ";
        names += catalog.tool_name(ToolId{t});
      }
      throw DataError("track " + track.video_id + ": frame " + std::to_string(f) +
                      " has tool set {" + names + "} not in catalog");
    }
    track.frames.push_back(*cls);
  }
  return track;
}

std::vector<Run> runs(const LabelTrack& track) {
  std::vector<Run> out;
  if (track.frames.empty()) throw ValidationError("runs: empty track");
  Run cur{track.frames[0], 0, 1};
  for (std::int64_t f = 1; f < track.frame_count(); ++f) {
    if (track.frames[static_cast<std::size_t>(f)] == cur.cls) {
      cur.end = f + 1;
    } else {
      out.push_back(cur);
      cur = Run{track.frames[static_cast<std::size_t>(f)], f, f + 1};
    }
  }
  out.push_back(cur);
  return out;
}

std::string label_track_to_csv(const LabelTrack& track, const ClassCatalog& catalog) {
  std::ostringstream out;
  out << "frame";
  for (const auto& tool : catalog.tools()) out << ',' << tool;
  out << '\n';
  for (std::int64_t f = 0; f < track.frame_count(); ++f) {
    out << f;
    const auto bits = catalog.tool_vector(track.frames[static_cast<std::size_t>(f)]);
    for (bool b : bits) out << ',' << (b ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

void write_label_track_csv(const LabelTrack& track, const ClassCatalog& catalog,
                           const std::filesystem::path& path) {
  write_file_atomic(path, label_track_to_csv(track, catalog));
}

std::vector<LabelTrack> load_label_tracks(const std::filesystem::path& dir, const ClassCatalog& catalog,
                                          double threshold) {
  if (!std::filesystem::is_directory(dir)) throw DataError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DataError("no annotation CSVs in " + dir.string());
  std::vector<LabelTrack> tracks;
  tracks.reserve(files.size());
  for (const auto& f : files) tracks.push_back(to_label_track(parse_raw_track(f, catalog), catalog, threshold));
  return tracks;
}

}  // namespace wfaug
