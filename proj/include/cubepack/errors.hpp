// Copyright 2026 The cubepack Authors
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

#ifndef CUBEPACK_ERRORS_HPP_
#define CUBEPACK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cubepack {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied argument is out of the documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A codeword enumeration would visit more than 2^cap words. The caller can
// raise the cap explicitly if the wait is intended.
class EnumerationRefused : public Error {
 public:
  using Error::Error;
};

// Materializing a point set would exceed the configured point budget. The
// counting entry points still work; so does streaming with early stop.
class MaterializationRefused : public Error {
 public:
  using Error::Error;
};

// A verification run would be too large for its mode (for example an
// exhaustive pair check over too many points). The message names a mode
// that does scale.
class VerificationRefused : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed. This is a bug
// in the library, never a user error, and is deliberately loud.
class InternalConsistencyFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cubepack

#endif  // CUBEPACK_ERRORS_HPP_
