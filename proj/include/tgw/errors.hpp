/* Copyright 2026 The tgw Authors. All Rights Reserved.

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

// Exception hierarchy. Every fault raised by the library derives from
// tgw::Error so callers can catch the whole family at once.

#ifndef TGW_ERRORS_HPP_
#define TGW_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tgw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text could not be read. `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ParseError(const std::string& what, std::string token, std::size_t position)
      : Error(what + " at position " + std::to_string(position) +
              (token.empty() ? std::string() : " ('" + token + "')")),
        token_(std::move(token)),
        position_(position) {}

  // For faults detected outside of text, e.g. a missing substitution image.
  ParseError(const std::string& what, std::string token)
      : Error(what + " ('" + token + "')"),
        token_(std::move(token)),
        position_(npos) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class NegativeExponentOnNonInvertible : public ParseError {
 public:
  using ParseError::ParseError;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NonUnitImageOfInvertibleVariable : public Error {
 public:
  explicit NonUnitImageOfInvertibleVariable(const std::string& var)
      : Error("image of invertible variable '" + var + "' is not a unit") {}
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidSite : public Error {
 public:
  using Error::Error;
};

class InconsistentDatum : public Error {
 public:
  InconsistentDatum()
      : Error("operation requires a consistent datum (check_consistency "
              "verdict is not Consistent)") {}
};

class DatumMismatch : public Error {
 public:
  DatumMismatch() : Error("elements belong to algebras over different data") {}
};

class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tgw

#endif  // TGW_ERRORS_HPP_
