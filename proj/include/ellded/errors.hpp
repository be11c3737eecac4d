// Copyright 2026 The ellded Authors
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

namespace ellded {

/// Base class for violations of an operation's mathematical domain.
/// The CLI maps every DomainError to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// gcd(p, q) != 1, or the pair is outside V / U.
class CoprimalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// tau is not in the upper half-plane, or too close to the real axis.
class HalfPlaneError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Argument hits a lattice point (pole) of the function being evaluated.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Any other precondition failure (bad weight, bad k range, ...).
class ArgumentError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ellded
