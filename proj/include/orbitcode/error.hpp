/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ORBITCODE_ERROR_HPP
#define ORBITCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbitcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range n, bad degree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two objects bound to different coordinate domains were combined.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A code handed to a routine that needs group invariance is not invariant.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (hex, code files, certificates).
class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace orbitcode

#endif  // ORBITCODE_ERROR_HPP
