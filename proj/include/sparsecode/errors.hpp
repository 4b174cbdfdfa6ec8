// Copyright 2026 The sparsecode Authors.
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

namespace sparsecode {

enum class ErrorKind {
  kCompositeOrder,
  kFieldMismatch,
  kZeroInverse,
  kEmptyBlock,
  kIndexError,
  kDomainError,
  kMacWilliamsViolation,
  kPreconditionError,
  kNoTestVectors,
  kNoCorrectionVectors,
  kScanTooLarge,
  kParseError,
  kBiasUnreachable,
};

std::string_view to_string(ErrorKind kind);

// Base of every error thrown by the library. The kind is what callers
// (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& what) : Error(K, what) {}
};

using CompositeOrder = KindedError<ErrorKind::kCompositeOrder>;
using FieldMismatch = KindedError<ErrorKind::kFieldMismatch>;
using ZeroInverse = KindedError<ErrorKind::kZeroInverse>;
using EmptyBlock = KindedError<ErrorKind::kEmptyBlock>;
using IndexError = KindedError<ErrorKind::kIndexError>;
using DomainError = KindedError<ErrorKind::kDomainError>;
using MacWilliamsViolation = KindedError<ErrorKind::kMacWilliamsViolation>;
using PreconditionError = KindedError<ErrorKind::kPreconditionError>;
using NoTestVectors = KindedError<ErrorKind::kNoTestVectors>;
using NoCorrectionVectors = KindedError<ErrorKind::kNoCorrectionVectors>;
using ScanTooLarge = KindedError<ErrorKind::kScanTooLarge>;
using ParseError = KindedError<ErrorKind::kParseError>;
using BiasUnreachable = KindedError<ErrorKind::kBiasUnreachable>;

}  // namespace sparsecode
