// Copyright 2026 The ferrtree Authors
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

namespace ferrtree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of mismatched length (Pauli strings, encodings, Hamiltonians).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A tree, graph or encoding violates a structural invariant.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range content in an input file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or parameter value.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace ferrtree
