// Copyright 2026 The JohnSpace Authors
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

#ifndef JOHNSPACE_ERROR_H_
#define JOHNSPACE_ERROR_H_

#include <stdexcept>
#include <string>

namespace johnspace {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (input/usage) or 1 (property failure) depending on the type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid geometry, out-of-domain points, or parameters outside the domain
// of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A discretization produced no usable vertices.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class UnreachableError : public Error {
 public:
  using Error::Error;
};

// A curve touches the boundary, so its quasihyperbolic length is infinite.
class DegenerateCurveError : public Error {
 public:
  using Error::Error;
};

// A curve that does not satisfy the structural precondition of a checker.
class MalformedCurveError : public Error {
 public:
  using Error::Error;
};

// A curve construction violated one of its guaranteed bounds, or the
// condition-3 oracle broke its contract.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace johnspace

#endif  // JOHNSPACE_ERROR_H_
