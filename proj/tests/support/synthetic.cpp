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

#include "support/synthetic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "curvesmith/color.hpp"

namespace curvesmith::testing {

RgbImage natural_image(std::mt19937_64& rng, int width, int height) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> grain(0.0, 0.01);

  const double exposure = 0.2 + 0.6 * u(rng);
  const double contrast = 0.3 + 0.6 * u(rng);
  const double angle = 2.0 * M_PI * u(rng);
  const Eigen::Vector3d tint(0.1 * u(rng) - 0.05, 0.1 * u(rng) - 0.05,
                             0.1 * u(rng) - 0.05);
  struct Blob {
    double cx, cy, radius, amp;
  };
  Blob blobs[4];
  for (auto& b : blobs) {
    b = {u(rng), u(rng), 0.1 + 0.3 * u(rng), (u(rng) - 0.5) * 0.8};
  }

  RgbImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double fx = (x + 0.5) / width;
      const double fy = (y + 0.5) / height;
      double v = exposure +
                 contrast * ((fx - 0.5) * std::cos(angle) + (fy - 0.5) * std::sin(angle));
      for (const auto& b : blobs) {
        const double r2 = (fx - b.cx) * (fx - b.cx) + (fy - b.cy) * (fy - b.cy);
        v += b.amp * std::exp(-r2 / (2 * b.radius * b.radius));
      }
      // Soft shoulder and toe keep the histogram free of clipped spikes.
      const double s = 0.48 + 0.45 * std::tanh(1.5 * (v - 0.5));
      Rgb8 p;
      for (int c = 0; c < 3; ++c) {
        const double t = std::clamp(s + tint[c] + grain(rng), 0.0, 1.0);
        p[c] = static_cast<std::uint8_t>(std::lround(t * 255.0));
      }
      img.set(x, y, p);
    }
  }
  return img;
}

RgbImage noise_image(std::mt19937_64& rng, int width, int height) {
  std::uniform_int_distribution<int> u(0, 255);
  RgbImage img(width, height);
  for (auto& b : img.bytes()) b = static_cast<std::uint8_t>(u(rng));
  return img;
}

RgbImage gamma_luminance(const RgbImage& img, double gamma) {
  LabImage lab = rgb_to_lab(img);
  lab.L = 100.0 * (lab.L / 100.0).pow(gamma);
  return lab_to_rgb(lab);
}

CurveVector random_curve(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CurveVector c;
  for (int i = 0; i < kCurveSamples; ++i) c[i] = u(rng);
  std::sort(c.data(), c.data() + kCurveSamples);
  c[kCurveSamples - 1] = 1.0;
  return c;
}

Eigen::MatrixXd random_spd(std::mt19937_64& rng, int d, double shift) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = n(rng);
  }
  Eigen::MatrixXd m = a.transpose() * a / d;
  m.diagonal().array() += shift;
  return (m + m.transpose()) / 2.0;
}

TempDir::TempDir(const std::string& prefix) {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          (prefix + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace curvesmith::testing
