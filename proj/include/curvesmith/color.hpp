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

#include <string_view>

#include <Eigen/Core>

#include "curvesmith/image.hpp"

namespace curvesmith {

/// RGB encodings supported by the Lab conversion. Both use a D65 white.
enum class ColorSpace { kSrgb, kAdobeRgb };

/// Accepts "srgb" or "adobe" (case-sensitive).
ColorSpace parse_color_space(std::string_view name);
std::string_view color_space_name(ColorSpace space);

/// Single-pixel conversions; the image versions below apply these per pixel.
Eigen::Vector3d pixel_to_lab(Rgb8 rgb, ColorSpace space);
Rgb8 lab_to_pixel(const Eigen::Vector3d& lab, ColorSpace space);

/// Gamma-expand, map to XYZ with the space's D65 matrix, then to CIELAB.
/// L is clamped to [0, 100].
LabImage rgb_to_lab(const RgbImage& img, ColorSpace space = ColorSpace::kSrgb);

/// Inverse of rgb_to_lab. Out-of-gamut values are clamped to [0, 255] after
/// rounding half away from zero. Throws InvalidInput for non-finite channels
/// or L outside [0, 100].
RgbImage lab_to_rgb(const LabImage& img, ColorSpace space = ColorSpace::kSrgb);

}  // namespace curvesmith
