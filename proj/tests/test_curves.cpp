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
#include <cstring>
#include <limits>
#include <random>

#include "curvesmith/color.hpp"
#include "curvesmith/curves.hpp"
#include "support/synthetic.hpp"

using namespace curvesmith;

namespace {

LabImage lab_from_luminance(const std::vector<double>& l) {
  LabImage img(static_cast<int>(l.size()), 1);
  for (std::size_t i = 0; i < l.size(); ++i) {
    img.L[Eigen::Index(i)] = l[i];
    img.a[Eigen::Index(i)] = 0.25 * double(i);
    img.b[Eigen::Index(i)] = -0.5 * double(i);
  }
  return img;
}

// Brute-force count of pixels at or below each sampling level.
CurveVector enumerate_curve(const std::vector<double>& l) {
  CurveVector c;
  for (int i = 0; i < kCurveSamples; ++i) {
    int count = 0;
    for (double v : l) count += v <= 2.0 * i ? 1 : 0;
    c[i] = double(count) / double(l.size());
  }
  return c;
}

// Dense histogram-matching oracle: rank fraction of each pixel, then the
// target's inverse found by bisection on its piecewise-linear interpolant.
std::vector<double> dense_match(const std::vector<double>& l, const CurveVector& target) {
  auto g = [&](double x) {
    if (x >= 100.0) return target[50];
    const int i = static_cast<int>(x / 2.0);
    const double t = (x - 2.0 * i) / 2.0;
    return target[i] + t * (target[i + 1] - target[i]);
  };
  std::vector<double> out;
  for (double v : l) {
    int count = 0;
    for (double w : l) count += w <= v ? 1 : 0;
    const double p = double(count) / double(l.size());
    double lo = 0.0, hi = 100.0;
    if (g(0.0) >= p) {
      out.push_back(0.0);
      continue;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) >= p ? hi : lo) = mid;
    }
    out.push_back(hi);
  }
  return out;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("empirical CDF examples") {
    auto cdf = empirical_cdf(lab_from_luminance({50, 50, 50}));
    CHECK(cdf.support == std::vector<double>{50});
    CHECK(cdf.cum == std::vector<double>{1.0});

    cdf = empirical_cdf(lab_from_luminance({100, 0}));
    CHECK(cdf.support == std::vector<double>{0, 100});
    CHECK(cdf.cum == std::vector<double>{0.5, 1.0});

    cdf = empirical_cdf(lab_from_luminance({10, 40, 10, 20}));
    CHECK(cdf.support == std::vector<double>{10, 20, 40});
    CHECK(cdf.cum == std::vector<double>{0.5, 0.75, 1.0});
    CHECK(cdf(9.99) == 0.0);
    CHECK(cdf(10.0) == 0.5);
    CHECK(cdf(39.0) == 0.75);
    CHECK(cdf(1000.0) == 1.0);

    CHECK_THROWS_AS(empirical_cdf(LabImage{}), InvalidInput);
  }

  TEST_CASE("sampled curve of a point mass is a step") {
    const SampledCurve c = luminance_curve(lab_from_luminance({50, 50}));
    for (int i = 0; i < kCurveSamples; ++i) CHECK(c[i] == (2 * i >= 50 ? 1.0 : 0.0));
  }

  TEST_CASE("sampled curve of the uniform lattice") {
    std::vector<double> l;
    for (int i = 0; i <= 50; ++i) l.push_back(2.0 * i);
    const SampledCurve c = luminance_curve(lab_from_luminance(l));
    for (int i = 0; i < kCurveSamples; ++i) {
      CHECK(c[i] == doctest::Approx((i + 1) / 51.0).epsilon(1e-15));
    }
  }

  TEST_CASE("sampled curve matches brute-force enumeration") {
    const std::vector<double> four{10, 10, 20, 40};
    const SampledCurve c = luminance_curve(lab_from_luminance(four));
    CHECK(c.values() == enumerate_curve(four));
    CHECK(c[4] == 0.0);
    CHECK(c[5] == 0.5);
    CHECK(c[9] == 0.5);
    CHECK(c[10] == 0.75);
    CHECK(c[20] == 1.0);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_real_distribution<double> u(0.0, 100.0);
      std::vector<double> l(200);
      for (auto& v : l) v = std::round(u(rng) * 4) / 4;  // force ties and lattice hits
      CHECK(luminance_curve(lab_from_luminance(l)).values() == enumerate_curve(l));
    }
  }

  TEST_CASE("curve invariants are enforced") {
    CurveVector v = CurveVector::LinSpaced(0.0, 1.0);
    CHECK_NOTHROW(SampledCurve{v});
    v[10] = v[9] - 0.01;
    CHECK_THROWS_AS(SampledCurve{v}, InvalidInput);
    v = CurveVector::LinSpaced(0.0, 0.9);
    CHECK_THROWS_AS(SampledCurve{v}, InvalidInput);
    v = CurveVector::LinSpaced(-0.1, 1.0);
    CHECK_THROWS_AS(SampledCurve{v}, InvalidInput);
  }

  TEST_CASE("monotone projection") {
    const CurveVector valid = CurveVector::LinSpaced(0.0, 1.0);
    CHECK(monotone_project(valid).values() == valid);

    CurveVector dip = valid;
    dip[0] = 0.5;
    dip[1] = 0.4;
    CHECK(monotone_project(dip)[1] == 0.5);

    const SampledCurve neg = monotone_project(CurveVector::Constant(-0.1));
    for (int i = 0; i < 50; ++i) CHECK(neg[i] == 0.0);
    CHECK(neg[50] == 1.0);

    CurveVector bad = valid;
    bad[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(monotone_project(bad), InvalidInput);

    std::mt19937_64 rng(4);
    std::normal_distribution<double> n(0.5, 0.7);
    for (int trial = 0; trial < 200; ++trial) {
      CurveVector raw;
      for (auto& x : raw) x = n(rng);
      const SampledCurve once = monotone_project(raw);
      CHECK(monotone_project(once.values()).values() == once.values());
    }
  }

  TEST_CASE("quantile resolves flat stretches to their left end") {
    CurveVector v = CurveVector::Zero();
    for (int i = 0; i < kCurveSamples; ++i) v[i] = i < 10 ? 0.0 : (i < 30 ? 0.5 : 1.0);
    const SampledCurve c(v);
    CHECK(c.quantile(0.0) == 0.0);
    CHECK(c.quantile(0.5) == doctest::Approx(20.0));  // jump between 18 and 20
    CHECK(c.quantile(0.25) == doctest::Approx(19.0));
    CHECK(c.quantile(1.0) == doctest::Approx(60.0));
    CHECK(c.evaluate(19.0) == doctest::Approx(0.25));
  }

  TEST_CASE("remapping a constant image lands on the target's first 1") {
    CurveVector v = CurveVector::Zero();
    for (int i = 0; i < kCurveSamples; ++i) v[i] = std::min(1.0, i / 40.0);
    const LabImage out = remap_luminance(lab_from_luminance({33, 33, 33}), SampledCurve(v));
    for (Eigen::Index i = 0; i < out.L.size(); ++i) CHECK(out.L[i] == doctest::Approx(80.0));
  }

  TEST_CASE("remapping to the image's own curve barely moves pixels") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
      const LabImage lab = rgb_to_lab(curvesmith::testing::natural_image(rng, 64, 48));
      const LabImage out = remap_luminance(lab, luminance_curve(lab));
      const auto moved_little = ((out.L - lab.L).abs() <= 1.0).count();
      CHECK(double(moved_little) >= 0.99 * double(lab.L.size()));
    }
  }

  TEST_CASE("uniform target on uniform luminance is near identity") {
    std::vector<double> l;
    for (int i = 0; i < 5000; ++i) l.push_back(100.0 * (i + 0.5) / 5000.0);
    std::shuffle(l.begin(), l.end(), std::mt19937_64(1));
    CurveVector target;
    for (int i = 0; i < kCurveSamples; ++i) target[i] = i / 50.0;
    const LabImage lab = lab_from_luminance(l);
    const LabImage out = remap_luminance(lab, SampledCurve(target));
    CHECK((out.L - lab.L).abs().maxCoeff() <= 2.0);
  }

  TEST_CASE("remap agrees with a dense histogram-matching oracle") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> l(300);
      for (auto& v : l) v = std::round(u(rng) * 10) / 10;
      const CurveVector target = curvesmith::testing::random_curve(rng);
      const LabImage out = remap_luminance(lab_from_luminance(l), SampledCurve(target));
      const std::vector<double> expected = dense_match(l, target);
      for (std::size_t i = 0; i < l.size(); ++i) {
        CHECK(std::abs(out.L[Eigen::Index(i)] - expected[i]) <= 1e-9);
      }
    }
  }

  TEST_CASE("remap properties on synthetic images") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      const LabImage lab = rgb_to_lab(curvesmith::testing::natural_image(rng, 48, 40));
      const SampledCurve target(curvesmith::testing::random_curve(rng));
      const LabImage out = remap_luminance(lab, target);

      // a/b untouched bit-for-bit
      CHECK(std::memcmp(out.a.data(), lab.a.data(), sizeof(double) * lab.a.size()) == 0);
      CHECK(std::memcmp(out.b.data(), lab.b.data(), sizeof(double) * lab.b.size()) == 0);
      CHECK(out.L.minCoeff() >= 0.0);
      CHECK(out.L.maxCoeff() <= 100.0);

      // order preserving
      for (Eigen::Index i = 1; i < lab.L.size(); ++i) {
        if (lab.L[i - 1] <= lab.L[i]) {
          CHECK(out.L[i - 1] <= out.L[i]);
        } else {
          CHECK(out.L[i - 1] >= out.L[i]);
        }
      }

      // residual bounded by the discreteness of the source histogram
      const auto distinct = empirical_cdf(lab).support.size();
      const double bound = std::max(2.0 / 51.0, 2.0 / double(distinct));
      CHECK(ks_distance(luminance_curve(out), target) <= bound);
    }
  }
}
