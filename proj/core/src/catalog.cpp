/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "wfaug/catalog.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "wfaug/errors.hpp"
#include "wfaug/io.hpp"

namespace wfaug {

ClassCatalog::ClassCatalog(std::vector<std::string> tools, std::vector<ClassDef> classes,
                           std::vector<std::string> start_classes, std::vector<std::string> final_classes)
    : tools_(std::move(tools)),
      classes_(std::move(classes)),
      start_classes_(std::move(start_classes)),
      final_classes_(std::move(final_classes)) {
  if (classes_.empty()) throw ValidationError("catalog: no classes");
  if (!classes_[0].tools.empty()) throw ValidationError("catalog: class 0 must be the idle class");

  for (int i = 0; i < static_cast<int>(tools_.size()); ++i) {
    if (tools_[i].empty()) throw ValidationError("catalog: empty tool name");
    if (!tool_index_.emplace(tools_[i], i).second)
      throw ValidationError("catalog: duplicate tool name: " + tools_[i]);
  }
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i) {
    auto& def = classes_[static_cast<std::size_t>(i)];
    if (def.name.empty()) throw ValidationError("catalog: empty class name");
    if (!class_index_.emplace(def.name, i).second)
      throw ValidationError("catalog: duplicate class name: " + def.name);
    if (i > 0 && def.tools.empty())
      throw ValidationError("catalog: class without tools: " + def.name);
    std::sort(def.tools.begin(), def.tools.end());
    if (std::adjacent_find(def.tools.begin(), def.tools.end()) != def.tools.end())
      throw ValidationError("catalog: repeated tool in class: " + def.name);
    for (int t : def.tools) {
      if (t < 0 || t >= tool_count())
        throw ValidationError("catalog: tool index out of range in class: " + def.name);
    }
    if (!combo_map_.emplace(def.tools, i).second)
      throw ValidationError("catalog: two classes share one tool set: " + def.name);
  }
  for (const auto& name : start_classes_) {
    if (!class_index_.count(name)) throw ValidationError("catalog: unknown start class: " + name);
  }
  for (const auto& name : final_classes_) {
    if (!class_index_.count(name)) throw ValidationError("catalog: unknown final class: " + name);
  }
}

std::optional<ToolId> ClassCatalog::tool_by_name(std::string_view name) const {
  auto it = tool_index_.find(name);
  if (it == tool_index_.end()) return std::nullopt;
  return ToolId{it->second};
}

std::optional<ClassId> ClassCatalog::class_by_name(std::string_view name) const {
  auto it = class_index_.find(name);
  if (it == class_index_.end()) return std::nullopt;
  return ClassId{it->second};
}

std::optional<ClassId> ClassCatalog::class_for_tools(std::vector<int> tools) const {
  std::sort(tools.begin(), tools.end());
  auto it = combo_map_.find(tools);
  if (it == combo_map_.end()) return std::nullopt;
  return ClassId{it->second};
}

std::vector<bool> ClassCatalog::tool_vector(ClassId c) const {
  std::vector<bool> v(static_cast<std::size_t>(tool_count()), false);
  for (int t : class_def(c).tools) v[static_cast<std::size_t>(t)] = true;
  return v;
}

ClassCatalog ClassCatalog::load(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog " + path.string() + ": " + e.what());
  }
  try {
    std::vector<std::string> tools = j.at("tools").get<std::vector<std::string>>();
    std::map<std::string, int> tool_idx;
    for (int i = 0; i < static_cast<int>(tools.size()); ++i) tool_idx[tools[static_cast<std::size_t>(i)]] = i;

    std::vector<ClassDef> classes;
    for (const auto& jc : j.at("classes")) {
      ClassDef def;
      def.name = jc.at("name").get<std::string>();
      def.phase = jc.value("phase", std::string{});
      for (const auto& jt : jc.value("tools", nlohmann::json::array())) {
        const auto tname = jt.get<std::string>();
        auto it = tool_idx.find(tname);
        if (it == tool_idx.end())
          throw ParseError("catalog " + path.string() + ": class '" + def.name + "' uses unknown tool '" + tname + "'");
        def.tools.push_back(it->second);
      }
      classes.push_back(std::move(def));
    }
    return ClassCatalog(std::move(tools), std::move(classes),
                        j.value("starts", std::vector<std::string>{}),
                        j.value("finals", std::vector<std::string>{}));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog " + path.string() + ": " + e.what());
  }
}

void ClassCatalog::save(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["tools"] = tools_;
  auto jclasses = nlohmann::json::array();
  for (const auto& def : classes_) {
    nlohmann::json jc;
    jc["name"] = def.name;
    auto names = nlohmann::json::array();
    for (int t : def.tools) names.push_back(tools_[static_cast<std::size_t>(t)]);
    jc["tools"] = names;
    jc["phase"] = def.phase;
    jclasses.push_back(jc);
  }
  j["classes"] = jclasses;
  j["starts"] = start_classes_;
  j["finals"] = final_classes_;
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace wfaug
