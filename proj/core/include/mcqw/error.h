// Copyright 2026 The mcqw Authors
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

#ifndef MCQW_ERROR_H_
#define MCQW_ERROR_H_

#include <stdexcept>
#include <string>

namespace mcqw {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or index mismatch: wrong vector length, qubit out of range, bad site.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A state that should be normalized is not (beyond the accepted tolerance).
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// The cyclic lattice is too small for the requested number of steps, so the
// walker support would wrap around and displacements become ambiguous.
class WraparoundError : public Error {
 public:
  using Error::Error;
};

// Doubling the quadrature resolution moved the result by more than the
// convergence tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Least-squares design matrix is singular or an input sweep carries no
// information about the fitted coefficient.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

// Malformed user input: state specs, state files, parameter strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcqw

#endif  // MCQW_ERROR_H_
