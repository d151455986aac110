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

#include "curvesmith/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>

namespace curvesmith {
namespace {

constexpr double kCubicA = -0.5;

struct Taps {
  std::array<int, 4> index;
  std::array<double, 4> weight;
};

// Precomputed source taps for every output coordinate along one axis.
std::vector<Taps> axis_taps(int src_size, int dst_size) {
  std::vector<Taps> taps(dst_size);
  const double scale = static_cast<double>(src_size) / dst_size;
  for (int i = 0; i < dst_size; ++i) {
    const double center = (i + 0.5) * scale - 0.5;
    const double base = std::floor(center);
    const double frac = center - base;
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      const int src = static_cast<int>(base) - 1 + k;
      taps[i].index[k] = std::clamp(src, 0, src_size - 1);
      taps[i].weight[k] = cubic_weight(frac - (k - 1));
      sum += taps[i].weight[k];
    }
    for (double& w : taps[i].weight) w /= sum;
  }
  return taps;
}

bool is_png(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

}  // namespace

double cubic_weight(double t) {
  t = std::abs(t);
  if (t <= 1.0) return ((kCubicA + 2.0) * t - (kCubicA + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((kCubicA * t - 5.0 * kCubicA) * t + 8.0 * kCubicA) * t - 4.0 * kCubicA;
  return 0.0;
}

std::pair<int, int> long_edge_dims(int width, int height, int target_long) {
  if (target_long < 1) {
    throw InvalidInput("long edge target must be >= 1, got " +
                       std::to_string(target_long));
  }
  if (width < 1 || height < 1) throw InvalidInput("empty image");
  const bool landscape = width >= height;
  const int long_in = landscape ? width : height;
  const int short_in = landscape ? height : width;
  const int short_out = std::max(
      1, static_cast<int>(std::round(static_cast<double>(target_long) *
                                     short_in / long_in)));
  return landscape ? std::pair{target_long, short_out}
                   : std::pair{short_out, target_long};
}

RgbImage resize_bicubic(const RgbImage& img, int width, int height) {
  if (img.empty()) throw InvalidInput("resize: empty image");
  if (width < 1 || height < 1) {
    throw InvalidInput("resize: target dimensions must be positive");
  }
  const std::vector<Taps> xt = axis_taps(img.width(), width);
  const std::vector<Taps> yt = axis_taps(img.height(), height);

  // Horizontal pass into a float buffer, then vertical pass with rounding.
  const int src_h = img.height();
  std::vector<double> tmp(static_cast<std::size_t>(src_h) * width * 3);
  const auto src = img.bytes();
  for (int y = 0; y < src_h; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * img.width() * 3;
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          acc += xt[x].weight[k] * src[row + std::size_t(xt[x].index[k]) * 3 + c];
        }
        tmp[(static_cast<std::size_t>(y) * width + x) * 3 + c] = acc;
      }
    }
  }

  RgbImage out(width, height);
  auto dst = out.bytes();
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          acc += yt[y].weight[k] *
                 tmp[(static_cast<std::size_t>(yt[y].index[k]) * width + x) * 3 + c];
        }
        dst[(static_cast<std::size_t>(y) * width + x) * 3 + c] =
            static_cast<std::uint8_t>(std::clamp(std::round(acc), 0.0, 255.0));
      }
    }
  }
  return out;
}

RgbImage resize_long_edge(const RgbImage& img, int target_long) {
  if (img.empty()) throw InvalidInput("resize_long_edge: empty image");
  const auto [w, h] = long_edge_dims(img.width(), img.height(), target_long);
  return resize_bicubic(img, w, h);
}

std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory: '" + dir.string() + "'");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_png(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return files;
}

PairingResult pair_dataset(const std::filesystem::path& raw_dir,
                           const std::filesystem::path& target_dir) {
  std::map<std::string, std::filesystem::path> raw;
  std::map<std::string, std::filesystem::path> target;
  PairingResult result;
  // A stem seen twice in one directory (a.png, a.PNG) keeps the first file.
  for (const auto& p : list_images(raw_dir)) {
    if (!raw.emplace(p.stem().string(), p).second) result.unmatched.push_back(p);
  }
  for (const auto& p : list_images(target_dir)) {
    if (!target.emplace(p.stem().string(), p).second) {
      result.unmatched.push_back(p);
    }
  }

  for (const auto& [stem, path] : raw) {
    auto it = target.find(stem);
    if (it == target.end()) {
      result.unmatched.push_back(path);
    } else {
      result.pairs.push_back({path, it->second, stem});
    }
  }
  for (const auto& [stem, path] : target) {
    if (!raw.contains(stem)) result.unmatched.push_back(path);
  }

  if (result.pairs.empty()) {
    std::string msg = "no raw/target pairs found between '" +
                      raw_dir.string() + "' and '" + target_dir.string() + "'";
    if (!result.unmatched.empty()) {
      msg += "; unmatched:";
      for (const auto& p : result.unmatched) msg += " " + p.string();
    }
    throw EmptyDataset(msg);
  }
  return result;
}

}  // namespace curvesmith
