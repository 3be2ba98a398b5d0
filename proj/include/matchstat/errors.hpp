// Copyright 2026 The matchstat Authors.
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

#ifndef MATCHSTAT_ERRORS_HPP_
#define MATCHSTAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matchstat {

// Base of every exception thrown by the library. The C API maps the
// subclasses onto its status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested computation exceeds a configured enumeration or size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Reading or writing a file failed, or its contents did not parse.
class IoError : public Error {
 public:
  using Error::Error;
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace matchstat

#endif  // MATCHSTAT_ERRORS_HPP_
