// Copyright 2026 The Authors.
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

#ifndef DELIB_ERROR_H_
#define DELIB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace delib {

enum class ErrorCode {
  kIdentity,   // unknown or inactive participant, missing idea
  kParameter,  // invalid argument or configuration
  kCapacity,   // enumeration cap exceeded
  kNumerical,  // iterative method failed to converge
  kFormat,     // malformed or unreadable input, unwritable output
  kUndefined,  // quantity undefined on the given input (e.g. empty matrix)
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; the code drives CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIdentity:
      return "identity";
    case ErrorCode::kParameter:
      return "parameter";
    case ErrorCode::kCapacity:
      return "capacity";
    case ErrorCode::kNumerical:
      return "numerical";
    case ErrorCode::kFormat:
      return "format";
    case ErrorCode::kUndefined:
      return "undefined";
  }
  return "unknown";
}

}  // namespace delib

#endif  // DELIB_ERROR_H_
