// Copyright 2026 The qwalk Authors
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

namespace qwalk {

// Base of every error the library throws on purpose. The C API maps the
// subclasses onto status codes; anything else surfaces as an internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates a documented constraint.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold for otherwise valid data
// (isolated vertex, untraced map, u == v, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested computation is outside what the implementation supports,
// e.g. exact arithmetic on frames with irrational squared entries.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
