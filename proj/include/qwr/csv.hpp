// Copyright 2026 The qwr Authors
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
#include <string>
#include <vector>

#include "qwr/spectrum.hpp"

namespace qwr {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);
/// Throws std::invalid_argument unless the whole of `text` is a number.
double parse_double(const std::string& text);

/// "l,probability" header, one row per l ascending, newline-terminated.
std::string spectrum_csv(const Spectrum& spec);
/// Writes spectrum_csv(spec). Throws std::runtime_error on I/O failure.
void emit_spectrum_csv(const Spectrum& spec, const std::filesystem::path& path);
/// Inverse of emit_spectrum_csv; rows must cover consecutive l.
Spectrum read_spectrum_csv(const std::filesystem::path& path);
Spectrum parse_spectrum_csv(const std::string& text);

/// Generic table: header plus pre-formatted cells.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace qwr
