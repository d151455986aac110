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

#include "curvesmith/color.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

namespace curvesmith {
namespace {

struct SpaceParams {
  Eigen::Matrix3d to_xyz;
  Eigen::Matrix3d from_xyz;
  // Reference white as the image of RGB (1,1,1); keeps neutrals at a=b=0.
  Eigen::Vector3d white;
};

SpaceParams make_params(const Eigen::Matrix3d& to_xyz) {
  return {to_xyz, to_xyz.inverse(), to_xyz * Eigen::Vector3d::Ones()};
}

const SpaceParams& params(ColorSpace space) {
  static const SpaceParams srgb = make_params(
      (Eigen::Matrix3d() << 0.4124564, 0.3575761, 0.1804375,  //
       0.2126729, 0.7151522, 0.0721750,                        //
       0.0193339, 0.1191920, 0.9503041)
          .finished());
  static const SpaceParams adobe = make_params(
      (Eigen::Matrix3d() << 0.5767309, 0.1855540, 0.1881852,  //
       0.2973769, 0.6273491, 0.0752741,                        //
       0.0270343, 0.0706872, 0.9911085)
          .finished());
  return space == ColorSpace::kSrgb ? srgb : adobe;
}

constexpr double kAdobeGamma = 563.0 / 256.0;

double expand(double v, ColorSpace space) {
  if (space == ColorSpace::kAdobeRgb) return std::pow(v, kAdobeGamma);
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double compress(double v, ColorSpace space) {
  v = std::max(v, 0.0);
  if (space == ColorSpace::kAdobeRgb) return std::pow(v, 1.0 / kAdobeGamma);
  return v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

constexpr double kDelta = 6.0 / 29.0;

double lab_f(double t) {
  return t > kDelta * kDelta * kDelta ? std::cbrt(t)
                                      : t / (3 * kDelta * kDelta) + 4.0 / 29.0;
}

double lab_f_inv(double t) {
  return t > kDelta ? t * t * t : 3 * kDelta * kDelta * (t - 4.0 / 29.0);
}

std::uint8_t quantize(double v) {
  // std::round is half-away-from-zero.
  return static_cast<std::uint8_t>(std::clamp(std::round(v * 255.0), 0.0, 255.0));
}

}  // namespace

ColorSpace parse_color_space(std::string_view name) {
  if (name == "srgb") return ColorSpace::kSrgb;
  if (name == "adobe") return ColorSpace::kAdobeRgb;
  throw InvalidInput("unknown color space '" + std::string(name) +
                     "' (expected srgb or adobe)");
}

std::string_view color_space_name(ColorSpace space) {
  return space == ColorSpace::kSrgb ? "srgb" : "adobe";
}

Eigen::Vector3d pixel_to_lab(Rgb8 rgb, ColorSpace space) {
  const SpaceParams& p = params(space);
  Eigen::Vector3d lin;
  for (int c = 0; c < 3; ++c) lin[c] = expand(rgb[c] / 255.0, space);
  const Eigen::Vector3d xyz = (p.to_xyz * lin).cwiseQuotient(p.white);
  const double fx = lab_f(xyz[0]);
  const double fy = lab_f(xyz[1]);
  const double fz = lab_f(xyz[2]);
  return {std::clamp(116.0 * fy - 16.0, 0.0, 100.0), 500.0 * (fx - fy),
          200.0 * (fy - fz)};
}

Rgb8 lab_to_pixel(const Eigen::Vector3d& lab, ColorSpace space) {
  const SpaceParams& p = params(space);
  const double fy = (lab[0] + 16.0) / 116.0;
  const Eigen::Vector3d xyz(lab_f_inv(fy + lab[1] / 500.0), lab_f_inv(fy),
                            lab_f_inv(fy - lab[2] / 200.0));
  const Eigen::Vector3d lin = p.from_xyz * xyz.cwiseProduct(p.white);
  return {quantize(compress(lin[0], space)), quantize(compress(lin[1], space)),
          quantize(compress(lin[2], space))};
}

LabImage rgb_to_lab(const RgbImage& img, ColorSpace space) {
  if (img.empty()) throw InvalidInput("rgb_to_lab: empty image");
  LabImage out(img.width(), img.height());
  const auto bytes = img.bytes();
  for (Eigen::Index i = 0; i < out.pixel_count(); ++i) {
    const Eigen::Vector3d lab = pixel_to_lab(
        {bytes[3 * i], bytes[3 * i + 1], bytes[3 * i + 2]}, space);
    out.L[i] = lab[0];
    out.a[i] = lab[1];
    out.b[i] = lab[2];
  }
  return out;
}

RgbImage lab_to_rgb(const LabImage& img, ColorSpace space) {
  if (img.empty()) throw InvalidInput("lab_to_rgb: empty image");
  if (img.a.size() != img.L.size() || img.b.size() != img.L.size() ||
      img.L.size() != Eigen::Index(img.width) * img.height) {
    throw InvalidInput("lab_to_rgb: plane sizes do not match dimensions");
  }
  RgbImage out(img.width, img.height);
  auto bytes = out.bytes();
  for (Eigen::Index i = 0; i < img.pixel_count(); ++i) {
    const Eigen::Vector3d lab(img.L[i], img.a[i], img.b[i]);
    if (!lab.allFinite()) {
      throw InvalidInput("lab_to_rgb: non-finite value at pixel " +
                         std::to_string(i));
    }
    if (lab[0] < 0.0 || lab[0] > 100.0) {
      throw InvalidInput("lab_to_rgb: L=" + std::to_string(lab[0]) +
                         " outside [0, 100] at pixel " + std::to_string(i));
    }
    const Rgb8 p = lab_to_pixel(lab, space);
    bytes[3 * i] = p[0];
    bytes[3 * i + 1] = p[1];
    bytes[3 * i + 2] = p[2];
  }
  return out;
}

}  // namespace curvesmith
