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

// Little-endian encoding helpers for the model and feature file formats.

#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "curvesmith/error.hpp"

namespace curvesmith::detail {

template <typename T>
T byteswap_if_big(T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &value, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) {
      std::swap(b[i], b[sizeof(T) - 1 - i]);
    }
    std::memcpy(&value, b, sizeof(T));
  }
  return value;
}

class ByteWriter {
 public:
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    buf_.insert(buf_.end(), p, p + n);
  }

  template <typename T>
  void put(T value) {
    value = byteswap_if_big(value);
    bytes(&value, sizeof(T));
  }

  const std::vector<unsigned char>& buffer() const noexcept { return buf_; }

 private:
  std::vector<unsigned char> buf_;
};

/// Bounds-checked reader; every failure reports the offset it stopped at.
class ByteReader {
 public:
  ByteReader(std::span<const unsigned char> data, std::string context)
      : data_(data), context_(std::move(context)) {}

  std::uint64_t offset() const noexcept { return pos_; }
  std::uint64_t remaining() const noexcept { return data_.size() - pos_; }

  void need(std::uint64_t n, const char* what) const {
    if (remaining() < n) {
      throw FormatError(context_ + ": truncated " + what + ", need " +
                            std::to_string(n) + " bytes, have " +
                            std::to_string(remaining()),
                        pos_);
    }
  }

  template <typename T>
  T get(const char* what) {
    need(sizeof(T), what);
    T value;
    std::memcpy(&value, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return byteswap_if_big(value);
  }

  std::span<const unsigned char> take(std::uint64_t n, const char* what) {
    need(n, what);
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  [[noreturn]] void fail(const std::string& msg, std::uint64_t at) const {
    throw FormatError(context_ + ": " + msg, at);
  }

 private:
  std::span<const unsigned char> data_;
  std::string context_;
  std::uint64_t pos_ = 0;
};

inline std::vector<unsigned char> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path,
                       const std::vector<unsigned char>& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace curvesmith::detail
