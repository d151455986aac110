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

#include "curvesmith/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvesmith {

SampledCurve::SampledCurve(const CurveVector& values) : values_(values) {
  if (!values_.allFinite()) throw InvalidInput("curve has non-finite values");
  for (int i = 0; i < kCurveSamples; ++i) {
    if (values_[i] < 0.0 || values_[i] > 1.0) {
      throw InvalidInput("curve value " + std::to_string(values_[i]) +
                         " at index " + std::to_string(i) +
                         " outside [0, 1]");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw InvalidInput("curve decreases at index " + std::to_string(i));
    }
  }
  if (values_[kCurveSamples - 1] != 1.0) {
    throw InvalidInput("curve must end at 1");
  }
}

double SampledCurve::evaluate(double level) const {
  if (level <= 0.0) return values_[0];
  if (level >= curve_level(kCurveSamples - 1)) return values_[kCurveSamples - 1];
  const int i = static_cast<int>(level / kCurveStep);
  const double t = (level - curve_level(i)) / kCurveStep;
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

double SampledCurve::quantile(double p) const {
  if (p <= values_[0]) return 0.0;
  const auto* begin = values_.data();
  const auto* end = begin + kCurveSamples;
  const auto* hit = std::lower_bound(begin, end, p);
  if (hit == end) return curve_level(kCurveSamples - 1);
  const int i = static_cast<int>(hit - begin);
  // values_[i-1] < p <= values_[i], so the segment is strictly increasing.
  const double lo = values_[i - 1];
  const double hi = values_[i];
  return curve_level(i - 1) + kCurveStep * (p - lo) / (hi - lo);
}

double EmpiricalCdf::operator()(double level) const {
  const auto it = std::upper_bound(support.begin(), support.end(), level);
  if (it == support.begin()) return 0.0;
  return cum[static_cast<std::size_t>(it - support.begin()) - 1];
}

EmpiricalCdf empirical_cdf(const LabImage& img) {
  if (img.empty()) throw InvalidInput("empirical_cdf: empty image");
  std::vector<double> sorted(img.L.data(), img.L.data() + img.L.size());
  std::sort(sorted.begin(), sorted.end());

  EmpiricalCdf cdf;
  const double total = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    cdf.support.push_back(sorted[i]);
    cdf.cum.push_back(static_cast<double>(i + 1) / total);
  }
  return cdf;
}

SampledCurve sample_curve(const EmpiricalCdf& cdf) {
  CurveVector values;
  for (int i = 0; i < kCurveSamples; ++i) values[i] = cdf(curve_level(i));
  values[kCurveSamples - 1] = 1.0;
  return SampledCurve(values);
}

SampledCurve monotone_project(const CurveVector& raw) {
  if (!raw.allFinite()) {
    throw InvalidInput("monotone_project: non-finite input");
  }
  CurveVector out;
  double running = raw[0];
  for (int i = 0; i < kCurveSamples; ++i) {
    running = std::max(running, raw[i]);
    out[i] = std::clamp(running, 0.0, 1.0);
  }
  out[kCurveSamples - 1] = 1.0;
  return SampledCurve(out);
}

LabImage remap_luminance(const LabImage& img, const SampledCurve& target) {
  const EmpiricalCdf cdf = empirical_cdf(img);
  std::vector<double> mapped(cdf.support.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    mapped[k] = std::clamp(target.quantile(cdf.cum[k]), 0.0, 100.0);
  }

  LabImage out = img;
  for (Eigen::Index i = 0; i < img.L.size(); ++i) {
    const auto it =
        std::lower_bound(cdf.support.begin(), cdf.support.end(), img.L[i]);
    out.L[i] = mapped[static_cast<std::size_t>(it - cdf.support.begin())];
  }
  return out;
}

}  // namespace curvesmith
