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

#ifndef TRISQUEEZE_ERROR_HPP
#define TRISQUEEZE_ERROR_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

namespace trisqueeze {

/// Raised when a caller breaks a documented precondition (bad dimension,
/// non-Hermitian input, invalid density matrix, repeated mode, ...).
class ContractViolation : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Closed forms exist only for the parametric families, never for GENERAL.
class UnsupportedFamily : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Closed forms assume nonnegative real amplitudes.
class UnsupportedRegime : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ClosedFormMismatch : public std::runtime_error {
   public:
    ClosedFormMismatch(const std::string &what, std::string spec_json)
        : std::runtime_error(what), spec_json_(std::move(spec_json)) {}

    const std::string &spec_json() const noexcept { return spec_json_; }

   private:
    std::string spec_json_;
};

class IoError : public std::runtime_error {
   public:
    IoError(const std::string &what, std::filesystem::path path)
        : std::runtime_error(what + ": " + path.string()), path_(std::move(path)) {}

    const std::filesystem::path &path() const noexcept { return path_; }

   private:
    std::filesystem::path path_;
};

}  // namespace trisqueeze

#endif  // TRISQUEEZE_ERROR_HPP
