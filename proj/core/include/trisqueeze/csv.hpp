// Copyright 2026 The trisqueeze Authors
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

#ifndef TRISQUEEZE_CSV_HPP
#define TRISQUEEZE_CSV_HPP

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace trisqueeze {

/// Shortest-form-free decimal with 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format_double(double value);

void write_csv_row(std::ostream &os, const std::vector<std::string> &cells);

/// Opens `path` for writing, creating parent directories. Throws IoError.
std::ofstream open_output(const std::filesystem::path &path);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_CSV_HPP
