// Copyright 2026 The Curvesmith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvesmith {

enum class ErrorKind {
  kInvalidInput,
  kIllConditioned,
  kInsufficientSamples,
  kEmptyDataset,
  kFormat,
  kIo,
};

/// Base of every error thrown by the library. The kind decides the CLI exit
/// code: format and I/O problems map to 2, everything else to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

/// Raised when K + alpha*I has no Cholesky factor. Carries the smallest
/// alpha (found by doubling) for which factorization succeeded.
class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double suggested_alpha)
      : Error(ErrorKind::kIllConditioned, what),
        suggested_alpha_(suggested_alpha) {}

  double suggested_alpha() const noexcept { return suggested_alpha_; }

 private:
  double suggested_alpha_;
};

class InsufficientSamples : public Error {
 public:
  explicit InsufficientSamples(const std::string& what)
      : Error(ErrorKind::kInsufficientSamples, what) {}
};

class EmptyDataset : public Error {
 public:
  explicit EmptyDataset(const std::string& what)
      : Error(ErrorKind::kEmptyDataset, what) {}
};

/// Malformed binary payload. `offset` is the byte position where decoding
/// stopped making sense.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::uint64_t offset)
      : Error(ErrorKind::kFormat,
              what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFormat:
    case ErrorKind::kIo:
      return 2;
    default:
      return 1;
  }
}

}  // namespace curvesmith
