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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "curvesmith/image.hpp"

namespace curvesmith {

/// Catmull-Rom weight (a = -0.5) for a sample at distance `t` from the
/// interpolation point.
double cubic_weight(double t);

/// Output dimensions of a long-edge resize: the long edge becomes
/// `target_long`, the short edge round(target_long * short / long) with
/// a floor of 1. Ties in the two edges treat width as the long one.
std::pair<int, int> long_edge_dims(int width, int height, int target_long);

/// Bicubic resample to exactly `width` x `height` over a 4x4 neighbourhood
/// with clamped edges. Pixel centres are aligned.
RgbImage resize_bicubic(const RgbImage& img, int width, int height);

RgbImage resize_long_edge(const RgbImage& img, int target_long);

struct DatasetPair {
  std::filesystem::path raw_path;
  std::filesystem::path target_path;
  std::string stem;
};

struct PairingResult {
  std::vector<DatasetPair> pairs;              // sorted by stem
  std::vector<std::filesystem::path> unmatched;  // files with no partner
};

/// Lists the PNG files (extension matched case-insensitively) of a
/// directory, sorted by filename.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir);

/// Matches raw and retouched PNGs by filename stem. Throws EmptyDataset,
/// listing every unmatched file, when no pair is found; otherwise unmatched
/// files are returned for the caller to report.
PairingResult pair_dataset(const std::filesystem::path& raw_dir,
                           const std::filesystem::path& target_dir);

}  // namespace curvesmith
