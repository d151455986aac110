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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "curvesmith/error.hpp"

namespace curvesmith {

using Rgb8 = std::array<std::uint8_t, 3>;

/// 8-bit RGB image, pixels interleaved R,G,B in row-major order.
class RgbImage {
 public:
  RgbImage() = default;

  RgbImage(int width, int height, Rgb8 fill = {0, 0, 0})
      : width_(width), height_(height) {
    check_dims(width, height);
    data_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < data_.size(); i += 3) {
      data_[i] = fill[0];
      data_[i + 1] = fill[1];
      data_[i + 2] = fill[2];
    }
  }

  RgbImage(int width, int height, std::vector<std::uint8_t> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height * 3) {
      throw InvalidInput("RgbImage: buffer holds " +
                         std::to_string(data_.size()) + " bytes, expected " +
                         std::to_string(std::size_t(width) * height * 3));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * height_;
  }
  bool empty() const noexcept { return data_.empty(); }

  Rgb8 at(int x, int y) const {
    const std::size_t i = index(x, y);
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(int x, int y, Rgb8 p) {
    const std::size_t i = index(x, y);
    data_[i] = p[0];
    data_[i + 1] = p[1];
    data_[i + 2] = p[2];
  }

  std::span<const std::uint8_t> bytes() const noexcept { return data_; }
  std::span<std::uint8_t> bytes() noexcept { return data_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  static void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
      throw InvalidInput("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
  }
  std::size_t index(int x, int y) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// CIELAB planes, one entry per pixel in row-major order. L lies in [0, 100].
template <typename Scalar>
struct BasicLabImage {
  using Plane = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  int width = 0;
  int height = 0;
  Plane L;
  Plane a;
  Plane b;

  BasicLabImage() = default;
  BasicLabImage(int w, int h)
      : width(w),
        height(h),
        L(Plane::Zero(Eigen::Index(w) * h)),
        a(Plane::Zero(Eigen::Index(w) * h)),
        b(Plane::Zero(Eigen::Index(w) * h)) {}

  Eigen::Index pixel_count() const noexcept { return L.size(); }
  bool empty() const noexcept { return L.size() == 0; }
};

using LabImage = BasicLabImage<double>;

}  // namespace curvesmith
