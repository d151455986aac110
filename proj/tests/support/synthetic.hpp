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

// Synthetic data shared by the unit and acceptance suites.

#pragma once

#include <filesystem>
#include <random>
#include <string>

#include <Eigen/Core>

#include "curvesmith/curves.hpp"
#include "curvesmith/image.hpp"

namespace curvesmith::testing {

/// Smooth "photo-like" image: a tilted gradient, a few soft blobs, mild
/// grain, random exposure and tint. Every call draws from one distribution.
RgbImage natural_image(std::mt19937_64& rng, int width, int height);

/// Independent uniform pixels.
RgbImage noise_image(std::mt19937_64& rng, int width, int height);

/// L' = 100 * (L / 100)^gamma applied in Lab, a/b kept.
RgbImage gamma_luminance(const RgbImage& img, double gamma);

/// A random valid curve: sorted uniform draws, last value forced to 1.
CurveVector random_curve(std::mt19937_64& rng);

/// Random symmetric positive definite matrix A^T A / d + shift * I.
Eigen::MatrixXd random_spd(std::mt19937_64& rng, int d, double shift = 0.1);

/// Directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace curvesmith::testing
