/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wfaug {

/// Index into the catalog's tool list.
struct ToolId {
  int value = 0;
  auto operator<=>(const ToolId&) const = default;
};

/// Index into the catalog's class list. Class 0 is always the idle class
/// ("no tool in contact").
struct ClassId {
  int value = 0;
  auto operator<=>(const ClassId&) const = default;
};

inline constexpr ClassId kIdleClass{0};

struct ClassDef {
  std::string name;        // tool name, combo joined by " & ", or the idle name
  std::vector<int> tools;  // sorted constituent tool indices; empty only for idle
  std::string phase;       // optional phase tag
};

/// Closed set of event classes: single tools, tool combos, and idle.
/// Immutable after construction; safe to share across threads.
class ClassCatalog {
 public:
  ClassCatalog(std::vector<std::string> tools, std::vector<ClassDef> classes,
               std::vector<std::string> start_classes, std::vector<std::string> final_classes);

  /// File format: JSON object with "tools", "classes" (name/tools/phase),
  /// "starts", "finals". Class 0 must be the idle class.
  static ClassCatalog load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  int tool_count() const { return static_cast<int>(tools_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }

  const std::string& tool_name(ToolId t) const { return tools_.at(static_cast<std::size_t>(t.value)); }
  const std::vector<std::string>& tools() const { return tools_; }

  const ClassDef& class_def(ClassId c) const { return classes_.at(static_cast<std::size_t>(c.value)); }
  const std::string& class_name(ClassId c) const { return class_def(c).name; }
  const std::string& phase_of(ClassId c) const { return class_def(c).phase; }
  bool is_idle(ClassId c) const { return c.value == 0; }

  std::optional<ToolId> tool_by_name(std::string_view name) const;
  std::optional<ClassId> class_by_name(std::string_view name) const;
  /// Class for a set of active tools (indices need not be sorted). The empty
  /// set maps to the idle class; an unknown combination yields nullopt.
  std::optional<ClassId> class_for_tools(std::vector<int> tools) const;

  /// Per-frame 0/1 tool vector for a class (idle -> all zeros).
  std::vector<bool> tool_vector(ClassId c) const;

  /// Start/final class names as declared in the catalog file. Informational:
  /// graph extraction derives starts/finals from the tracks themselves.
  const std::vector<std::string>& start_classes() const { return start_classes_; }
  const std::vector<std::string>& final_classes() const { return final_classes_; }

 private:
  std::vector<std::string> tools_;
  std::vector<ClassDef> classes_;
  std::map<std::string, int, std::less<>> tool_index_;
  std::map<std::string, int, std::less<>> class_index_;
  std::map<std::vector<int>, int> combo_map_;  // sorted tool set -> class
  std::vector<std::string> start_classes_;
  std::vector<std::string> final_classes_;
};

}  // namespace wfaug
