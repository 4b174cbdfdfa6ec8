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

#include "sparsecode/errors.hpp"

namespace sparsecode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCompositeOrder: return "CompositeOrder";
    case ErrorKind::kFieldMismatch: return "FieldMismatch";
    case ErrorKind::kZeroInverse: return "ZeroInverse";
    case ErrorKind::kEmptyBlock: return "EmptyBlock";
    case ErrorKind::kIndexError: return "IndexError";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kMacWilliamsViolation: return "MacWilliamsViolation";
    case ErrorKind::kPreconditionError: return "PreconditionError";
    case ErrorKind::kNoTestVectors: return "NoTestVectors";
    case ErrorKind::kNoCorrectionVectors: return "NoCorrectionVectors";
    case ErrorKind::kScanTooLarge: return "ScanTooLarge";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kBiasUnreachable: return "BiasUnreachable";
  }
  return "Unknown";
}

}  // namespace sparsecode
