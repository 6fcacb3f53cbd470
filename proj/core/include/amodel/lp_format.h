// Copyright 2026 The amodel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reader and writer for a strict subset of the LP file format. The grammar
// is documented in docs/lp_format.md.
//
// The writer is deterministic: variables and rows appear in index order,
// every variable gets an explicit line in Bounds, and numbers use the
// shortest decimal that parses back to the same double. Reading the output
// yields an image with the same Digest().

#ifndef AMODEL_LP_FORMAT_H_
#define AMODEL_LP_FORMAT_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "amodel/model_image.h"

namespace amodel {

// Raises UnsupportedInDialect for constraints other than scalar affine
// LessEqual / GreaterEqual / EqualTo and integrality records.
void WriteLp(const ModelImage& image, std::ostream& out);
std::string WriteLpString(const ModelImage& image);
// Raises IoError when the file cannot be written.
void WriteLpFile(const ModelImage& image, const std::filesystem::path& path);

// Raises ParseError (with line and column) or UnknownSection.
ModelImage ReadLp(std::string_view text);
// Raises IoError when the file cannot be read.
ModelImage ReadLpFile(const std::filesystem::path& path);

}  // namespace amodel

#endif  // AMODEL_LP_FORMAT_H_
