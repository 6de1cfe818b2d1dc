/* Copyright 2026 The Splitplan Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SPLITPLAN_ERRORS_HPP_
#define SPLITPLAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace splitplan {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document: bad JSON, missing/unknown keys, wrong types.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid document whose values violate a model invariant
// (non-monotone accuracy map, non-contiguous indices, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An argument outside its documented domain (e.g. d_r out of range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// No partition point satisfies the accuracy constraint.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Feature-packet wire format violations. Each decode failure mode is a
// distinct kind so callers can tell them apart programmatically.
class WireFormatError : public Error {
 public:
  enum class Kind {
    kBadMagic,
    kUnsupportedVersion,
    kTruncated,
    kGeometryMismatch,
    kBadScale,
  };

  WireFormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace splitplan

#endif  // SPLITPLAN_ERRORS_HPP_
