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

#include <vector>

#include <Eigen/Core>

#include "curvesmith/image.hpp"

namespace curvesmith {

/// Number of luminance levels a curve is sampled at: 0, 2, ..., 100.
inline constexpr int kCurveSamples = 51;
inline constexpr double kCurveStep = 2.0;

using CurveVector = Eigen::Matrix<double, kCurveSamples, 1>;

inline constexpr double curve_level(int i) { return kCurveStep * i; }

/// Luminance CDF evaluated at the 51 sampling levels. Always non-decreasing,
/// within [0, 1], and ending at exactly 1.
class SampledCurve {
 public:
  /// Validates the invariants; throws InvalidInput if any is violated.
  explicit SampledCurve(const CurveVector& values);

  const CurveVector& values() const noexcept { return values_; }
  double operator[](int i) const { return values_[i]; }

  /// Piecewise-linear interpolation between the sampling levels.
  double evaluate(double level) const;

  /// Generalized inverse inf{l : G(l) >= p} of the interpolated curve.
  /// Flat stretches resolve to their left end.
  double quantile(double p) const;

 private:
  CurveVector values_;
};

/// Right-continuous step CDF of an image's luminance.
struct EmpiricalCdf {
  std::vector<double> support;  // distinct L values, strictly increasing
  std::vector<double> cum;      // fraction of pixels with L <= support[k]

  /// F(l); 0 below the first support point.
  double operator()(double level) const;
};

EmpiricalCdf empirical_cdf(const LabImage& img);

SampledCurve sample_curve(const EmpiricalCdf& cdf);

/// Running maximum, clamp to [0, 1], force the last entry to 1. Maps any
/// finite vector onto a valid curve; throws InvalidInput on NaN/inf.
SampledCurve monotone_project(const CurveVector& raw);

/// Histogram-matches the L channel: L' = G^-(F(L)) with F the full
/// empirical CDF of `img` and G the interpolated target. a and b are copied
/// unchanged.
LabImage remap_luminance(const LabImage& img, const SampledCurve& target);

/// Convenience: luminance curve of an image in one call.
inline SampledCurve luminance_curve(const LabImage& img) {
  return sample_curve(empirical_cdf(img));
}

/// Kolmogorov-Smirnov distance between two sampled curves.
inline double ks_distance(const SampledCurve& a, const SampledCurve& b) {
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

}  // namespace curvesmith
