// Copyright 2026 The qcckit authors
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

namespace qcc {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes do not line up (non-square input, incompatible channel dims, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A physics invariant failed validation: completeness sum, Choi positivity,
// POVM closure, hermiticity, density-matrix trace, out-of-range parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not meet its contract: singular solve,
// residual above tolerance, optimizer under-estimate detected.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Problem-spec documents: malformed text, unknown keys, bad blocks.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcc
