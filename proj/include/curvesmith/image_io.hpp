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

#include <filesystem>

#include "curvesmith/image.hpp"

namespace curvesmith {

/// Decodes any PNG into 8-bit RGB. Gray and palette images are expanded,
/// 16-bit samples are truncated to their high byte, and an alpha channel is
/// dropped with a warning on stderr. Throws IoError if the file cannot be
/// opened and FormatError if it is not a decodable PNG.
RgbImage read_png(const std::filesystem::path& path);

/// Writes a non-interlaced 8-bit RGB PNG. Throws IoError on failure.
void write_png(const std::filesystem::path& path, const RgbImage& img);

}  // namespace curvesmith
