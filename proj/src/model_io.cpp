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

#include <algorithm>
#include <cmath>
#include <limits>

#include "binary_io.hpp"
#include "curvesmith/gpr.hpp"

namespace curvesmith::gpr {
namespace {

constexpr char kMagic[4] = {'G', 'P', 'R', 'M'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kHeaderBytes = 4 + 4 * 4 + 8 + 8 + 8;

void put_matrix(detail::ByteWriter& w, const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) w.put(m(r, c));
  }
}

Eigen::MatrixXd get_matrix(detail::ByteReader& r, Eigen::Index rows,
                           Eigen::Index cols, const char* what) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = r.get<double>(what);
  }
  return m;
}

}  // namespace

std::vector<unsigned char> encode_model(const GprModel& model) {
  detail::ByteWriter w;
  w.bytes(kMagic, 4);
  w.put(kVersion);
  w.put(static_cast<std::uint32_t>(model.size()));
  w.put(static_cast<std::uint32_t>(model.input_dim()));
  w.put(static_cast<std::uint32_t>(model.output_dim()));
  w.put(model.alpha());
  w.put(model.kernel().length_scale());
  w.put(model.cv_seed());
  put_matrix(w, model.x_train());
  put_matrix(w, model.dual());
  put_matrix(w, model.chol());
  return w.buffer();
}

GprModel decode_model(const std::vector<unsigned char>& bytes,
                      const std::string& context) {
  detail::ByteReader r(bytes, context);
  const auto magic = r.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    r.fail("bad magic, expected GPRM", 0);
  }
  const auto version = r.get<std::uint32_t>("version");
  if (version != kVersion) {
    r.fail("unsupported version " + std::to_string(version), 4);
  }
  const auto n = r.get<std::uint32_t>("row count");
  const auto in_dim = r.get<std::uint32_t>("input dim");
  const auto out_dim = r.get<std::uint32_t>("output dim");
  if (n == 0 || in_dim == 0 || out_dim == 0) {
    r.fail("zero-sized model", 8);
  }
  const auto alpha = r.get<double>("alpha");
  const auto length_scale = r.get<double>("length scale");
  const auto seed = r.get<std::uint64_t>("cv seed");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) r.fail("invalid alpha", 24);
  if (!(length_scale > 0.0) || !std::isfinite(length_scale)) {
    r.fail("invalid length scale", 32);
  }

  // Sizes fit in u64 comfortably: each factor is below 2^32.
  const std::uint64_t cells = std::uint64_t(n) * in_dim + std::uint64_t(n) * out_dim +
                              std::uint64_t(n) * n;
  if (cells > (std::numeric_limits<std::uint64_t>::max() - kHeaderBytes) / 8) {
    r.fail("payload size overflows", 8);
  }
  r.need(cells * 8, "payload");
  if (r.remaining() != cells * 8) {
    r.fail("trailing bytes after payload", kHeaderBytes + cells * 8);
  }

  Eigen::MatrixXd x = get_matrix(r, n, in_dim, "training inputs");
  Eigen::MatrixXd dual = get_matrix(r, n, out_dim, "dual weights");
  Eigen::MatrixXd chol = get_matrix(r, n, n, "cholesky factor");
  return GprModel(std::move(x), alpha, RbfKernel(length_scale), std::move(chol),
                  std::move(dual), seed);
}

void save_model(const GprModel& model, const std::filesystem::path& path) {
  detail::write_file(path, encode_model(model));
}

GprModel load_model(const std::filesystem::path& path) {
  return decode_model(detail::read_file(path), path.string());
}

}  // namespace curvesmith::gpr
