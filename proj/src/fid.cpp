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

#include "curvesmith/fid.hpp"

#include <zlib.h>

#include <algorithm>
#include <limits>

#include "binary_io.hpp"
#include "curvesmith/image_io.hpp"
#include "curvesmith/parallel.hpp"
#include "curvesmith/preprocess.hpp"

namespace curvesmith {
namespace {

constexpr char kMagic[4] = {'F', 'E', 'A', 'T'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kHeaderBytes = 4 + 4 + 4 + 8;

std::uint32_t payload_crc(std::span<const unsigned char> payload) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large payloads in chunks.
  constexpr std::size_t kChunk = 1u << 30;
  for (std::size_t off = 0; off < payload.size(); off += kChunk) {
    const std::size_t len = std::min(kChunk, payload.size() - off);
    crc = crc32(crc, payload.data() + off, static_cast<uInt>(len));
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

FeatureSet::FeatureSet(Matrix rows, std::string source_tag)
    : rows_(std::move(rows)), source_tag_(std::move(source_tag)) {
  if (rows_.rows() < 2) {
    throw InsufficientSamples("feature set needs at least 2 rows, got " +
                              std::to_string(rows_.rows()));
  }
  if (rows_.cols() < 1) throw InvalidInput("feature set has zero dimension");
  if (!rows_.allFinite()) {
    throw InvalidInput("feature set contains non-finite values");
  }
}

GaussianStats<double> fit_gaussian(const FeatureSet& fs) {
  return fit_gaussian(fs.rows().cast<double>());
}

std::vector<unsigned char> encode_features(const FeatureSet& fs) {
  detail::ByteWriter header;
  header.bytes(kMagic, 4);
  header.put(kVersion);
  header.put(static_cast<std::uint32_t>(fs.dim()));
  header.put(static_cast<std::uint64_t>(fs.count()));

  detail::ByteWriter payload;
  const auto& m = fs.rows();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) payload.put(m(r, c));
  }

  std::vector<unsigned char> out = header.buffer();
  out.insert(out.end(), payload.buffer().begin(), payload.buffer().end());
  detail::ByteWriter trailer;
  trailer.put(payload_crc(payload.buffer()));
  out.insert(out.end(), trailer.buffer().begin(), trailer.buffer().end());
  return out;
}

FeatureSet decode_features(const std::vector<unsigned char>& bytes,
                           const std::string& context) {
  detail::ByteReader r(bytes, context);
  const auto magic = r.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    r.fail("bad magic, expected FEAT", 0);
  }
  const auto version = r.get<std::uint32_t>("version");
  if (version != kVersion) {
    r.fail("unsupported version " + std::to_string(version), 4);
  }
  const auto dim = r.get<std::uint32_t>("dim");
  const auto count = r.get<std::uint64_t>("count");
  if (dim == 0) r.fail("zero feature dimension", 8);

  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (count > (kMax - kHeaderBytes - 4) / 4 / dim ||
      count > static_cast<std::uint64_t>(std::numeric_limits<Eigen::Index>::max()) / dim) {
    r.fail("dim * count overflows", 12);
  }
  const std::uint64_t payload_bytes = count * dim * 4;
  const auto payload = r.take(payload_bytes, "payload");
  const std::uint64_t crc_offset = r.offset();
  const auto stored_crc = r.get<std::uint32_t>("crc");
  if (r.remaining() != 0) r.fail("trailing bytes after crc", r.offset());
  if (stored_crc != payload_crc(payload)) {
    r.fail("crc mismatch", crc_offset);
  }

  FeatureSet::Matrix m(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(dim));
  detail::ByteReader pr(payload, context);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = pr.get<float>("payload");
  }
  return FeatureSet(std::move(m), context);
}

void write_features(const FeatureSet& fs, const std::filesystem::path& path) {
  detail::write_file(path, encode_features(fs));
}

FeatureSet read_features(const std::filesystem::path& path) {
  return decode_features(detail::read_file(path), path.string());
}

Eigen::VectorXf tiny_image_features(const RgbImage& img) {
  const RgbImage small = resize_bicubic(img, kTinyFeatureSide, kTinyFeatureSide);
  Eigen::VectorXf out(kTinyFeatureDim);
  const auto bytes = small.bytes();
  for (int i = 0; i < kTinyFeatureDim; ++i) out[i] = bytes[i] / 255.0f;
  return out;
}

FeatureSet extract_tiny_features(const std::filesystem::path& dir, int jobs) {
  const auto files = list_images(dir);
  if (files.size() < 2) {
    throw InsufficientSamples("need at least 2 images in '" + dir.string() +
                              "', found " + std::to_string(files.size()));
  }
  FeatureSet::Matrix m(static_cast<Eigen::Index>(files.size()), kTinyFeatureDim);
  parallel_for(files.size(), jobs, [&](std::size_t i) {
    m.row(static_cast<Eigen::Index>(i)) =
        tiny_image_features(read_png(files[i])).transpose();
  });
  return FeatureSet(std::move(m), dir.string());
}

}  // namespace curvesmith
