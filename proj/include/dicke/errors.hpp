// Copyright 2026 The dicke-sim Authors
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

namespace dicke {

/// Failure categories. The C API maps these one-to-one onto status codes.
enum class ErrorKind {
  Validation,
  Singular,
  Degenerate,
  NotPsd,
  Capacity,
  Integration,
  Range,
  NotFound,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::Validation, what) {}
};

class SingularError : public Error {
 public:
  SingularError(const std::string& what, double rcond)
      : Error(ErrorKind::Singular, what), rcond_(rcond) {}
  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

class DegeneracyError : public Error {
 public:
  DegeneracyError(const std::string& what, double smallest, double second)
      : Error(ErrorKind::Degenerate, what),
        smallest_(smallest),
        second_(second) {}
  double smallest_singular_value() const noexcept { return smallest_; }
  double second_singular_value() const noexcept { return second_; }

 private:
  double smallest_;
  double second_;
};

class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(ErrorKind::NotPsd, what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ErrorKind::Capacity, what) {}
};

class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double time_reached)
      : Error(ErrorKind::Integration, what), time_reached_(time_reached) {}
  double time_reached() const noexcept { return time_reached_; }

 private:
  double time_reached_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what)
      : Error(ErrorKind::NotFound, what) {}
};

}  // namespace dicke
