// Copyright 2026 The scarsim Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCARSIM_ERRORS_HPP
#define SCARSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scarsim {

/// Base class for all scarsim errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (sizes, tags, mismatched bases).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to converge or produced an inconsistent
/// result (Krylov breakdown, quadrature non-convergence, unitarity loss).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A size or memory cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace scarsim

#endif  // SCARSIM_ERRORS_HPP
