// Copyright 2026 The qrgcorr Authors
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

#include "qrg/errors.hpp"

namespace qrg {

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotXStructured:
            return "NotXStructured";
        case ErrorKind::NotDensityMatrix:
            return "NotDensityMatrix";
        case ErrorKind::InvalidDistribution:
            return "InvalidDistribution";
        case ErrorKind::DomainError:
            return "DomainError";
        case ErrorKind::NotSymmetric:
            return "NotSymmetric";
        case ErrorKind::NonUniformGrid:
            return "NonUniformGrid";
        case ErrorKind::ExtremumAtBoundary:
            return "ExtremumAtBoundary";
        case ErrorKind::NonPositiveValue:
            return "NonPositiveValue";
        case ErrorKind::Overflow:
            return "Overflow";
    }
    return "Unknown";
}

}  // namespace qrg
