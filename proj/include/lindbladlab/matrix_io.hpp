// Copyright 2026 The lindbladlab authors
//
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

#pragma once

#include <string>

#include "lindbladlab/core.hpp"

namespace lindbladlab {

/// Text format for complex matrices: a "rows cols" header line, then one
/// matrix row per line as real/imaginary pairs. Values are written with 17
/// significant digits so load/save round-trips are byte-identical.
ComplexMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m);

/// String-level codecs behind the file functions; parse errors carry
/// "line:column" positions.
ComplexMatrix parse_matrix(const std::string& text, const std::string& origin = "<string>");
std::string format_matrix(const ComplexMatrix& m);

}  // namespace lindbladlab
