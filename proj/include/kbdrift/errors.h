// Copyright 2026 The kbdrift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KBDRIFT_ERRORS_H_
#define KBDRIFT_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kbdrift {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structurally broken snapshot dump. Carries the absolute byte offset of
// the offending input and a short description of the surrounding element.
class DumpError : public Error {
 public:
  DumpError(std::uint64_t byte_offset, const std::string& context,
            const std::string& msg)
      : Error("dump error at byte " + std::to_string(byte_offset) + " (" +
              context + "): " + msg),
        byte_offset_(byte_offset),
        context_(context) {}

  std::uint64_t byte_offset() const { return byte_offset_; }
  const std::string& context() const { return context_; }

 private:
  std::uint64_t byte_offset_;
  std::string context_;
};

// A malformed serialized artifact (index TSV, ground-truth JSONL, sidecar
// file). Line numbers are 1-based; 0 means the whole file.
class FormatError : public Error {
 public:
  FormatError(const std::string& path, std::int64_t line, const std::string& msg)
      : Error(path + ":" + std::to_string(line) + ": " + msg),
        path_(path),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::int64_t line() const { return line_; }

 private:
  std::string path_;
  std::int64_t line_;
};

// Stored checksum does not match the file contents.
class ChecksumError : public FormatError {
 public:
  ChecksumError(const std::string& path, std::int64_t line, const std::string& msg)
      : FormatError(path, line, msg) {}
};

// Top-k lists of different nominal depth cannot be compared.
class DepthMismatchError : public Error {
 public:
  DepthMismatchError(int lhs_k, int rhs_k)
      : Error("top-k depth mismatch: " + std::to_string(lhs_k) + " vs " +
              std::to_string(rhs_k)) {}
};

// Prediction and gold lists passed to accuracy() must be aligned.
class LengthMismatchError : public Error {
 public:
  LengthMismatchError(std::size_t results, std::size_t gold)
      : Error("result/gold length mismatch: " + std::to_string(results) +
              " vs " + std::to_string(gold)) {}
};

// Bad workspace configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace kbdrift

#endif  // KBDRIFT_ERRORS_H_
