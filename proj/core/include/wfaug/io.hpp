/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace wfaug {

/// Reads a whole file; throws DataError if unreadable.
std::string read_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// FNV-1a 64-bit over the bytes, as a 16-digit lowercase hex string.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace wfaug
