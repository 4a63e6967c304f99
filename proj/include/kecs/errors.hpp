// Copyright 2026 The KECS Authors.
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace kecs {

enum class ErrorKind {
  kInput,         // malformed or inconsistent arguments
  kFormat,        // unparsable text input
  kPrecondition,  // input valid but outside an operation's domain
  kParameter,     // numeric parameter out of range
  kBudget,        // search budget exhausted
  kConstruction,  // a built object failed its own invariant check
  kCertificate,   // a certificate does not have the required shape
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "input";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kConstruction: return "construction";
    case ErrorKind::kCertificate: return "certificate";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InputError(const std::string& m) { return {ErrorKind::kInput, m}; }
inline Error FormatError(const std::string& m) { return {ErrorKind::kFormat, m}; }
inline Error PreconditionError(const std::string& m) {
  return {ErrorKind::kPrecondition, m};
}
inline Error ParameterError(const std::string& m) {
  return {ErrorKind::kParameter, m};
}
inline Error ConstructionError(const std::string& m) {
  return {ErrorKind::kConstruction, m};
}
inline Error CertificateError(const std::string& m) {
  return {ErrorKind::kCertificate, m};
}

}  // namespace kecs
