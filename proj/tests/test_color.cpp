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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>

#include "curvesmith/color.hpp"

using namespace curvesmith;

namespace {

int max_channel_diff(Rgb8 a, Rgb8 b) {
  int d = 0;
  for (int c = 0; c < 3; ++c) d = std::max(d, std::abs(int(a[c]) - int(b[c])));
  return d;
}

}  // namespace

TEST_SUITE("color") {
  TEST_CASE("black maps to the Lab origin") {
    for (auto space : {ColorSpace::kSrgb, ColorSpace::kAdobeRgb}) {
      const auto lab = pixel_to_lab({0, 0, 0}, space);
      CHECK(std::abs(lab[0]) <= 1e-9);
      CHECK(std::abs(lab[1]) < 1e-9);
      CHECK(std::abs(lab[2]) < 1e-9);
    }
  }

  TEST_CASE("white maps to L=100 with neutral chroma") {
    for (auto space : {ColorSpace::kSrgb, ColorSpace::kAdobeRgb}) {
      const auto lab = pixel_to_lab({255, 255, 255}, space);
      CHECK(std::abs(lab[0] - 100.0) < 1e-9);
      CHECK(std::abs(lab[1]) <= 0.5);
      CHECK(std::abs(lab[2]) <= 0.5);
    }
  }

  TEST_CASE("sRGB mid-gray matches the hand-evaluated formula chain") {
    // v = 119/255; Y = ((v + 0.055) / 1.055)^2.4; L = 116 * cbrt(Y) - 16,
    // evaluated independently in double precision.
    const auto lab = pixel_to_lab({119, 119, 119}, ColorSpace::kSrgb);
    CHECK(lab[0] == doctest::Approx(50.0344387925).epsilon(1e-10));
    CHECK(std::abs(lab[1]) < 1e-9);
    CHECK(std::abs(lab[2]) < 1e-9);
  }

  TEST_CASE("Lab extremes map back to black and white") {
    for (auto space : {ColorSpace::kSrgb, ColorSpace::kAdobeRgb}) {
      CHECK(lab_to_pixel({0, 0, 0}, space) == Rgb8{0, 0, 0});
      CHECK(lab_to_pixel({100, 0, 0}, space) == Rgb8{255, 255, 255});
    }
  }

  TEST_CASE("grays round-trip exactly, are monotone in L and neutral") {
    for (auto space : {ColorSpace::kSrgb, ColorSpace::kAdobeRgb}) {
      double prev_l = -1.0;
      for (int g = 0; g < 256; ++g) {
        const auto v = static_cast<std::uint8_t>(g);
        const Rgb8 p{v, v, v};
        const auto lab = pixel_to_lab(p, space);
        CHECK(max_channel_diff(lab_to_pixel(lab, space), p) <= 1);
        CHECK(lab[0] > prev_l);
        CHECK(std::abs(lab[1]) <= 0.5);
        CHECK(std::abs(lab[2]) <= 0.5);
        prev_l = lab[0];
      }
    }
  }

  TEST_CASE("subsampled RGB lattice round-trips within one level") {
    for (auto space : {ColorSpace::kSrgb, ColorSpace::kAdobeRgb}) {
      int worst = 0;
      for (int r = 0; r < 256; r += 5) {
        for (int g = 0; g < 256; g += 5) {
          for (int b = 0; b < 256; b += 5) {
            const Rgb8 p{std::uint8_t(r), std::uint8_t(g), std::uint8_t(b)};
            worst = std::max(worst,
                             max_channel_diff(lab_to_pixel(pixel_to_lab(p, space), space), p));
          }
        }
      }
      CHECK(worst <= 1);
    }
  }

  TEST_CASE("image conversion keeps dimensions and L in range") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> u(0, 255);
    RgbImage img(7, 5);
    for (auto& b : img.bytes()) b = static_cast<std::uint8_t>(u(rng));
    const LabImage lab = rgb_to_lab(img);
    CHECK(lab.width == 7);
    CHECK(lab.height == 5);
    CHECK(lab.L.minCoeff() >= 0.0);
    CHECK(lab.L.maxCoeff() <= 100.0);
    const RgbImage back = lab_to_rgb(lab);
    for (int y = 0; y < 5; ++y) {
      for (int x = 0; x < 7; ++x) CHECK(max_channel_diff(back.at(x, y), img.at(x, y)) <= 1);
    }
  }

  TEST_CASE("out-of-gamut Lab values clamp to the 8-bit range") {
    // Far outside the sRGB gamut: at least one channel must saturate.
    const Rgb8 p = lab_to_pixel({50, 120, -120}, ColorSpace::kSrgb);
    const bool clipped = std::any_of(p.begin(), p.end(),
                                     [](std::uint8_t v) { return v == 0 || v == 255; });
    CHECK(clipped);
  }

  TEST_CASE("error paths") {
    CHECK_THROWS_AS(rgb_to_lab(RgbImage{}), InvalidInput);
    CHECK_THROWS_AS(RgbImage(0, 3), InvalidInput);

    LabImage lab(2, 1);
    lab.L[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(lab_to_rgb(lab), InvalidInput);
    lab.L[0] = 50.0;
    lab.b[1] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(lab_to_rgb(lab), InvalidInput);
    lab.b[1] = 0.0;
    lab.L[1] = 100.5;
    CHECK_THROWS_AS(lab_to_rgb(lab), InvalidInput);

    CHECK(parse_color_space("srgb") == ColorSpace::kSrgb);
    CHECK(parse_color_space("adobe") == ColorSpace::kAdobeRgb);
    CHECK_THROWS_AS(parse_color_space("prophoto"), InvalidInput);
  }
}
