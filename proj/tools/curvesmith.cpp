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

// curvesmith: learn and apply photographer tone curves, and score image sets
// with the Frechet distance.
//
// Every numeric flag can also come from a CURVESMITH_* environment variable;
// an explicit flag always wins over the environment, which wins over the
// built-in default.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvesmith/pipeline.hpp"

namespace {

using namespace curvesmith;

struct Options {
  PipelineConfig config;
  std::string space = "srgb";
};

void add_space(CLI::App* cmd, Options& opt) {
  cmd->add_option("--space", opt.space, "RGB encoding of the images")
      ->check(CLI::IsMember({"srgb", "adobe"}))
      ->envname("CURVESMITH_SPACE")
      ->capture_default_str();
}

void add_jobs(CLI::App* cmd, Options& opt) {
  cmd->add_option("--jobs", opt.config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("CURVESMITH_JOBS")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn and apply luminance tone curves; compute FID."};
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);

  Options opt;

  // preprocess
  std::string pre_in, pre_out;
  auto* pre = app.add_subcommand("preprocess", "Resize PNGs so the long edge is N pixels");
  pre->add_option("--input-dir", pre_in)->required()->check(CLI::ExistingDirectory);
  pre->add_option("--output-dir", pre_out)->required();
  pre->add_option("--long-edge", opt.config.long_edge, "Target long edge")
      ->check(CLI::PositiveNumber)
      ->envname("CURVESMITH_LONG_EDGE")
      ->capture_default_str();
  add_space(pre, opt);
  add_jobs(pre, opt);

  // fit
  std::string fit_raw, fit_target, fit_out;
  auto* fit = app.add_subcommand("fit", "Learn a raw -> retouched curve regressor");
  fit->add_option("--raw-dir", fit_raw)->required();
  fit->add_option("--target-dir", fit_target)->required();
  fit->add_option("--out", fit_out, "Model file to write")->required();
  fit->add_option("--alpha", opt.config.alpha, "GP noise variance")
      ->envname("CURVESMITH_ALPHA")
      ->capture_default_str();
  fit->add_option("--folds", opt.config.folds, "Cross-validation folds")
      ->envname("CURVESMITH_FOLDS")
      ->capture_default_str();
  fit->add_option("--grid", opt.config.grid, "RBF length scales to try")
      ->envname("CURVESMITH_GRID")
      ->delimiter(',')
      ->capture_default_str();
  fit->add_option("--seed", opt.config.seed, "Fold shuffle seed")
      ->envname("CURVESMITH_SEED")
      ->capture_default_str();
  add_space(fit, opt);
  add_jobs(fit, opt);

  // apply
  std::string apply_model, apply_in, apply_out;
  auto* apply = app.add_subcommand("apply", "Retouch one image with a fitted model");
  apply->add_option("--model", apply_model)->required();
  apply->add_option("--input", apply_in)->required();
  apply->add_option("--output", apply_out)->required();
  add_space(apply, opt);

  // curve
  std::string curve_image;
  bool curve_json = false;
  bool curve_csv = false;
  auto* curve = app.add_subcommand("curve", "Print the 51-point luminance CDF of an image");
  curve->add_option("--image", curve_image)->required();
  auto* json_flag = curve->add_flag("--json", curve_json, "JSON array output");
  curve->add_flag("--csv", curve_csv, "One value per line (default)")->excludes(json_flag);
  add_space(curve, opt);

  // fid
  std::string fa, fb, ia, ib, extractor = "tiny";
  auto* fid = app.add_subcommand("fid", "Frechet distance between two feature sets");
  auto* o_fa = fid->add_option("--features-a", fa);
  auto* o_fb = fid->add_option("--features-b", fb);
  auto* o_ia = fid->add_option("--images-a", ia);
  auto* o_ib = fid->add_option("--images-b", ib);
  fid->add_option("--extractor", extractor, "Built-in extractor for image dirs")
      ->capture_default_str();
  o_fa->needs(o_fb)->excludes(o_ia)->excludes(o_ib);
  o_fb->needs(o_fa);
  o_ia->needs(o_ib);
  o_ib->needs(o_ia);
  add_jobs(fid, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    opt.config.color_space = parse_color_space(opt.space);
    opt.config.validate();

    if (*pre) {
      cmd_preprocess(opt.config, pre_in, pre_out, std::cerr);
    } else if (*fit) {
      cmd_fit(opt.config, fit_raw, fit_target, fit_out, std::cout, std::cerr);
    } else if (*apply) {
      cmd_apply(opt.config, apply_model, apply_in, apply_out);
    } else if (*curve) {
      cmd_curve(opt.config, curve_image,
                curve_json ? CurveFormat::kJson : CurveFormat::kCsv, std::cout);
    } else if (*fid) {
      if (!fa.empty()) {
        cmd_fid_features(fa, fb, std::cout);
      } else if (!ia.empty()) {
        cmd_fid_images(opt.config, ia, ib, extractor, std::cout);
      } else {
        std::cerr << "fid: give --features-a/--features-b or --images-a/--images-b\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
