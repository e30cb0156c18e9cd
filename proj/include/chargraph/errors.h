// Copyright 2026 The chargraph Authors
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

#ifndef CHARGRAPH_ERRORS_H_
#define CHARGRAPH_ERRORS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chargraph {

enum class ErrorCode {
  kInvalidArgument,
  kNotDistance3,
  kNotAPartition,
  kTooSmall,
  kBadPattern,
  kMalformed,
  kInvalid,
  kSearchTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `vertex` names the offending prime
// for partition errors; `field` names the offending record field for
// corpus validation errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::uint64_t> vertex = std::nullopt,
        std::string field = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        vertex_(vertex),
        field_(std::move(field)) {}

  ErrorCode code() const { return code_; }
  std::optional<std::uint64_t> vertex() const { return vertex_; }
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::optional<std::uint64_t> vertex_;
  std::string field_;
};

}  // namespace chargraph

#endif  // CHARGRAPH_ERRORS_H_
