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

#include "curvesmith/image_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace curvesmith {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  return f;
}

void on_png_error(png_structp png, png_const_charp msg) {
  auto* text = static_cast<std::string*>(png_get_error_ptr(png));
  if (text) *text = msg;
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

}  // namespace

RgbImage read_png(const std::filesystem::path& path) {
  FilePtr file = open_file(path, "rb");

  png_byte signature[8] = {};
  if (std::fread(signature, 1, 8, file.get()) != 8 ||
      png_sig_cmp(signature, 0, 8) != 0) {
    throw FormatError("'" + path.string() + "' is not a PNG file", 0);
  }

  std::string error_text;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error_text,
                                           on_png_error, on_png_warning);
  if (!png) throw IoError("libpng: cannot allocate read struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng: cannot allocate info struct");
  }

  // Everything below may longjmp back here; only trivially destructible
  // locals and the pre-sized buffer live across the jump.
  std::vector<png_byte> raw;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  bool has_alpha = false;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("cannot decode '" + path.string() + "': " + error_text,
                      0);
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const png_size_t channels = png_get_channels(png, info);
  has_alpha = channels == 4;
  raw.resize(static_cast<std::size_t>(width) * height * channels);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = raw.data() + static_cast<std::size_t>(y) * width * channels;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  if (width == 0 || height == 0) {
    throw FormatError("'" + path.string() + "' has no pixels", 16);
  }

  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(width) * height * 3);
  if (has_alpha) {
    std::cerr << "warning: " << path.string() << ": alpha channel dropped\n";
    for (std::size_t i = 0, n = std::size_t(width) * height; i < n; ++i) {
      rgb[3 * i] = raw[4 * i];
      rgb[3 * i + 1] = raw[4 * i + 1];
      rgb[3 * i + 2] = raw[4 * i + 2];
    }
  } else {
    rgb = std::move(raw);
  }
  return RgbImage(static_cast<int>(width), static_cast<int>(height),
                  std::move(rgb));
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
  if (img.empty()) throw InvalidInput("write_png: empty image");
  FilePtr file = open_file(path, "wb");

  std::string error_text;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error_text,
                                            on_png_error, on_png_warning);
  if (!png) throw IoError("libpng: cannot allocate write struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng: cannot allocate info struct");
  }

  std::vector<png_bytep> rows(img.height());
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("cannot write '" + path.string() + "': " + error_text);
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  // libpng takes non-const row pointers but does not modify them on write.
  auto* base = const_cast<std::uint8_t*>(img.bytes().data());
  for (int y = 0; y < img.height(); ++y) {
    rows[y] = base + static_cast<std::size_t>(y) * img.width() * 3;
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);

  if (std::fflush(file.get()) != 0) {
    throw IoError("cannot flush '" + path.string() + "'");
  }
}

}  // namespace curvesmith
