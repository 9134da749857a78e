// Copyright 2026 The gaussfock Authors
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

namespace gaussfock {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Bad parameters that are not a shape problem (negative occupation, eps <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested object does not fit the Fock cutoff (amplitude too large,
// cutoff too small for the moments asked for).
class TruncationError : public Error {
 public:
  using Error::Error;
};

// A limit along an epsilon or step schedule failed to settle.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Input matrix is not normal to the configured tolerance.
class NotNormal : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussfock
