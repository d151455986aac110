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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "curvesmith/color.hpp"
#include "curvesmith/curves.hpp"
#include "curvesmith/gpr.hpp"
#include "curvesmith/parallel.hpp"

namespace curvesmith {

inline constexpr const char* kVersionString = "0.1.0";

struct PipelineConfig {
  ColorSpace color_space = ColorSpace::kSrgb;
  int long_edge = 500;
  double alpha = gpr::kDefaultAlpha;
  int folds = 5;
  std::vector<double> grid = gpr::kDefaultGrid;
  std::uint64_t seed = gpr::kDefaultSeed;
  int jobs = default_jobs();

  /// Throws InvalidInput naming the first out-of-range field.
  void validate() const;
};

struct FitReport {
  gpr::CvResult cv;
  std::size_t pairs_used = 0;
  std::vector<std::string> failures;  // "<file>: <reason>" per skipped pair
  double wall_seconds = 0.0;
};

/// Pairs the directories by stem, learns raw -> retouched luminance curves,
/// cross-validates the kernel, refits on everything and writes the model.
/// The CV table goes to `out` as TSV; warnings and progress go to `log`.
/// Aborts when more than 10% of the pairs fail to decode.
FitReport cmd_fit(const PipelineConfig& config,
                  const std::filesystem::path& raw_dir,
                  const std::filesystem::path& target_dir,
                  const std::filesystem::path& model_path, std::ostream& out,
                  std::ostream& log);

/// Predicts a target curve for `img`, projects it onto valid curves and
/// histogram-matches the luminance to it.
LabImage apply_curve_model(const gpr::GprModel& model, const LabImage& img);

void cmd_apply(const PipelineConfig& config,
               const std::filesystem::path& model_path,
               const std::filesystem::path& input,
               const std::filesystem::path& output);

enum class CurveFormat { kCsv, kJson };

/// Writes the 51 sampled CDF values of an image.
void cmd_curve(const PipelineConfig& config, const std::filesystem::path& image,
               CurveFormat format, std::ostream& out);

/// FID between two feature files; prints the value with 4 decimals.
double cmd_fid_features(const std::filesystem::path& a,
                        const std::filesystem::path& b, std::ostream& out);

/// FID between two image directories using the named built-in extractor
/// (only "tiny" exists).
double cmd_fid_images(const PipelineConfig& config,
                      const std::filesystem::path& a,
                      const std::filesystem::path& b,
                      const std::string& extractor, std::ostream& out);

/// Long-edge resizes every PNG of `input_dir` into `output_dir` (created if
/// missing). Returns the number of images written.
std::size_t cmd_preprocess(const PipelineConfig& config,
                           const std::filesystem::path& input_dir,
                           const std::filesystem::path& output_dir,
                           std::ostream& log);

}  // namespace curvesmith
