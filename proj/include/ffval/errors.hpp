// Copyright 2026 The ffval Authors
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

#ifndef FFVAL_ERRORS_HPP
#define FFVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffval {

/// Base class for all ffval errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument value (mismatched fields, zero where nonzero required, ...).
class ValueError : public Error {
 public:
  explicit ValueError(const std::string& msg) : Error(msg) {}
};

/// Input is outside the supported fragment (e.g. factoring high-degree
/// polynomials over the rationals, nonlinear residue situations over Q).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

/// A valuation could not be pinned down exactly.  Raised instead of ever
/// returning a possibly wrong order.
class AmbiguousValuationError : public Error {
 public:
  explicit AmbiguousValuationError(const std::string& msg) : Error(msg) {}
};

/// Configuration failed semantic validation.  Carries the violated clause.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Malformed or structurally invalid serialized input (I/O layer, as
/// opposed to semantic validation).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// A self-check that must hold by construction failed.  Signals a bug.
class InternalCheckError : public Error {
 public:
  explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

/// A construction invariant failed after a step.  Carries a forensic dump
/// (JSON text) describing the offending state.
class InvariantFailure : public Error {
 public:
  InvariantFailure(const std::string& msg, std::string dump)
      : Error(msg), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

}  // namespace ffval

#endif  // FFVAL_ERRORS_HPP
