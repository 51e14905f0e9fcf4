/*
 * wfaug - workflow-driven surgical video synthesis and augmentation
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace wfaug {

/// Bad configuration or violated precondition (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or inconsistent input data (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file; message names the offending file/line.
class ParseError : public DataError {
 public:
  explicit ParseError(const std::string& what) : DataError(what) {}
};

}  // namespace wfaug
