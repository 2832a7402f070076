// Copyright 2026 The catlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dense construction requested for more spins than the configured cap.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// Outcome specification that names no realizable M_z eigenvalue
/// (wrong parity, out of range, or empty after parity filtering).
class InvalidOutcomeError : public Error {
   public:
    using Error::Error;
};

/// Outcome whose Born probability is below the impossibility floor.
class ImpossibleOutcomeError : public Error {
   public:
    using Error::Error;
};

/// A precondition on an operator or state was not met
/// (non-Hermitian input, dimension mismatch, mixed state where pure is required, ...).
class ContractViolation : public Error {
   public:
    using Error::Error;
};

/// Arguments outside the domain of a closed-form expression.
class DomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace catlab
