// Copyright 2026 The gdmux Authors
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

namespace gdm {

enum class ErrorCode {
  NotPrime,
  EvenCharUnsupported,
  FieldTooLarge,
  InvalidArgument,
  DivisionByZero,
  SpecMismatch,
  ZeroHasNoOrder,
  NoSuchOrder,
  NotInvertible,
  JNotEmbeddable,
  KindMismatch,
  LengthMismatch,
  NonPositive,
  NotCoprime,
  FormulaInapplicable,
  PartitionMismatch,
  NotBaseFieldSpectrum,
  LeaderCountMismatch,
  InternalInconsistency,
  NotBaseField,
  ZeroCosets,
  NegativeSnr,
  ParseError,
  Overflow,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gdm
