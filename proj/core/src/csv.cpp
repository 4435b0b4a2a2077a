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

#include "trisqueeze/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_csv_row(std::ostream &os, const std::vector<std::string> &cells) {
    for (std::size_t n = 0; n < cells.size(); ++n) {
        if (n) os << ',';
        const std::string &cell = cells[n];
        if (cell.find_first_of(",\"\n") == std::string::npos) {
            os << cell;
        } else {
            os << '"';
            for (char ch : cell) {
                if (ch == '"') os << '"';
                os << ch;
            }
            os << '"';
        }
    }
    os << '\n';
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory (" + ec.message() + ")", path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing", path);
    return out;
}

}  // namespace trisqueeze
