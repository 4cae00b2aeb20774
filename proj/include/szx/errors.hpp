// Copyright 2026 The szx Authors
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

#ifndef SZX_ERRORS_HPP
#define SZX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace szx {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (matrix product, block matrices, phase
/// function sizes, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A square F2 matrix has no inverse.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError() : Error("not invertible over F2") {}
};

/// Sequential composition of diagrams whose wire types differ.
class TypeMismatchError : public Error {
 public:
  using Error::Error;
};

/// Evaluation would exceed the configured wire or memory limits.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, bit strings, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (bad vertex, index range).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace szx

#endif  // SZX_ERRORS_HPP
