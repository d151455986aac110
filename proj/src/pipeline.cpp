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

#include "curvesmith/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>

#include "curvesmith/fid.hpp"
#include "curvesmith/image_io.hpp"
#include "curvesmith/preprocess.hpp"

namespace curvesmith {
namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

SampledCurve curve_of_file(const std::filesystem::path& path, ColorSpace space) {
  return luminance_curve(rgb_to_lab(read_png(path), space));
}

}  // namespace

void PipelineConfig::validate() const {
  if (long_edge < 1) throw InvalidInput("long edge must be >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput("alpha must be finite and non-negative");
  }
  if (folds < 2) throw InvalidInput("folds must be >= 2");
  if (grid.empty()) throw InvalidInput("length-scale grid is empty");
  for (double ls : grid) {
    if (!(ls > 0.0) || !std::isfinite(ls)) {
      throw InvalidInput("grid length scales must be positive and finite");
    }
  }
  if (jobs < 1) throw InvalidInput("jobs must be >= 1");
}

FitReport cmd_fit(const PipelineConfig& config,
                  const std::filesystem::path& raw_dir,
                  const std::filesystem::path& target_dir,
                  const std::filesystem::path& model_path, std::ostream& out,
                  std::ostream& log) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  const PairingResult pairing = pair_dataset(raw_dir, target_dir);
  for (const auto& p : pairing.unmatched) {
    log << "warning: unmatched file " << p.string() << "\n";
  }
  const auto& pairs = pairing.pairs;
  if (pairs.size() < static_cast<std::size_t>(config.folds)) {
    throw InvalidInput(std::to_string(pairs.size()) + " pairs found but " +
                       std::to_string(config.folds) +
                       "-fold cross-validation needs at least " +
                       std::to_string(config.folds));
  }

  struct Decoded {
    std::optional<CurveVector> raw;
    std::optional<CurveVector> target;
    std::string error;
    ErrorKind kind = ErrorKind::kIo;
  };
  std::vector<Decoded> decoded(pairs.size());
  parallel_for(pairs.size(), config.jobs, [&](std::size_t i) {
    const auto* current = &pairs[i].raw_path;
    try {
      decoded[i].raw = curve_of_file(pairs[i].raw_path, config.color_space).values();
      current = &pairs[i].target_path;
      decoded[i].target =
          curve_of_file(pairs[i].target_path, config.color_space).values();
    } catch (const Error& e) {
      decoded[i].error = current->string() + ": " + e.what();
      decoded[i].kind = e.kind();
    }
  });

  FitReport report;
  std::vector<std::size_t> good;
  std::optional<ErrorKind> first_kind;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if (decoded[i].error.empty()) {
      good.push_back(i);
    } else {
      report.failures.push_back(decoded[i].error);
      if (!first_kind) first_kind = decoded[i].kind;
      log << "error: " << decoded[i].error << "\n";
    }
  }
  if (report.failures.size() * 10 > pairs.size()) {
    const std::string msg = std::to_string(report.failures.size()) + " of " +
                            std::to_string(pairs.size()) +
                            " pairs failed to decode (limit 10%)";
    if (*first_kind == ErrorKind::kFormat) throw FormatError(msg, 0);
    throw IoError(msg);
  }
  if (good.size() < static_cast<std::size_t>(config.folds)) {
    throw InvalidInput("only " + std::to_string(good.size()) +
                       " usable pairs for " + std::to_string(config.folds) +
                       "-fold cross-validation");
  }

  const auto n = static_cast<Eigen::Index>(good.size());
  Eigen::MatrixXd x(n, kCurveSamples);
  Eigen::MatrixXd y(n, kCurveSamples);
  for (Eigen::Index r = 0; r < n; ++r) {
    x.row(r) = decoded[good[r]].raw->transpose();
    y.row(r) = decoded[good[r]].target->transpose();
  }

  report.cv = gpr::cross_validate(x, y, config.grid, config.folds, config.alpha,
                                  config.seed, config.jobs);
  const gpr::GprModel model =
      gpr::fit(x, y, report.cv.kernel, config.alpha, config.seed);
  gpr::save_model(model, model_path);
  report.pairs_used = good.size();

  out << "length_scale\tcv_rmse\tselected\n";
  for (std::size_t c = 0; c < report.cv.grid.size(); ++c) {
    char line[128];
    std::snprintf(line, sizeof(line), "%g\t%.9g\t%d\n", report.cv.grid[c],
                  report.cv.rmse[c],
                  report.cv.grid[c] == report.cv.kernel.length_scale() ? 1 : 0);
    out << line;
  }

  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  log << "fit: " << report.pairs_used << " pairs, " << config.folds
      << " folds, length scale " << report.cv.kernel.length_scale() << ", "
      << report.wall_seconds << " s\n";
  return report;
}

LabImage apply_curve_model(const gpr::GprModel& model, const LabImage& img) {
  if (model.input_dim() != kCurveSamples || model.output_dim() != kCurveSamples) {
    throw InvalidInput("model maps " + std::to_string(model.input_dim()) +
                       " -> " + std::to_string(model.output_dim()) +
                       " values, expected 51 -> 51");
  }
  const SampledCurve source = luminance_curve(img);
  const CurveVector raw = model.predict(source.values());
  return remap_luminance(img, monotone_project(raw));
}

void cmd_apply(const PipelineConfig& config,
               const std::filesystem::path& model_path,
               const std::filesystem::path& input,
               const std::filesystem::path& output) {
  const gpr::GprModel model = gpr::load_model(model_path);
  const LabImage lab = rgb_to_lab(read_png(input), config.color_space);
  write_png(output, lab_to_rgb(apply_curve_model(model, lab), config.color_space));
}

void cmd_curve(const PipelineConfig& config, const std::filesystem::path& image,
               CurveFormat format, std::ostream& out) {
  const SampledCurve curve = curve_of_file(image, config.color_space);
  char buf[64];
  if (format == CurveFormat::kCsv) {
    for (int i = 0; i < kCurveSamples; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", curve[i]);
      out << buf;
    }
    return;
  }
  out << "[";
  for (int i = 0; i < kCurveSamples; ++i) {
    std::snprintf(buf, sizeof(buf), "%s%.17g", i ? ", " : "", curve[i]);
    out << buf;
  }
  out << "]\n";
}

double cmd_fid_features(const std::filesystem::path& a,
                        const std::filesystem::path& b, std::ostream& out) {
  const FeatureSet fa = read_features(a);
  const FeatureSet fb = read_features(b);
  const double d2 = frechet_distance(fit_gaussian(fa), fit_gaussian(fb));
  out << fixed4(d2) << "\n";
  return d2;
}

double cmd_fid_images(const PipelineConfig& config,
                      const std::filesystem::path& a,
                      const std::filesystem::path& b,
                      const std::string& extractor, std::ostream& out) {
  if (extractor != "tiny") {
    throw InvalidInput("unknown extractor '" + extractor +
                       "'; only 'tiny' is built in, use exported feature "
                       "files for Inception features");
  }
  const FeatureSet fa = extract_tiny_features(a, config.jobs);
  const FeatureSet fb = extract_tiny_features(b, config.jobs);
  const double d2 = frechet_distance(fit_gaussian(fa), fit_gaussian(fb));
  out << fixed4(d2) << "\n";
  return d2;
}

std::size_t cmd_preprocess(const PipelineConfig& config,
                           const std::filesystem::path& input_dir,
                           const std::filesystem::path& output_dir,
                           std::ostream& log) {
  config.validate();
  const auto files = list_images(input_dir);
  if (files.empty()) {
    throw EmptyDataset("no PNG images in '" + input_dir.string() + "'");
  }
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) {
    throw IoError("cannot create '" + output_dir.string() + "': " + ec.message());
  }
  parallel_for(files.size(), config.jobs, [&](std::size_t i) {
    const auto target = output_dir / (files[i].stem().string() + ".png");
    write_png(target, resize_long_edge(read_png(files[i]), config.long_edge));
  });
  log << "preprocess: wrote " << files.size() << " images to "
      << output_dir.string() << "\n";
  return files.size();
}

}  // namespace curvesmith
