// Copyright 2026 The litgraph Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace litgraph {

// Base of every error thrown by the library. Callers that do not care about
// the category can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph-core

class SignatureViolation : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

// Mutation attempted after seal().
class SealedGraph : public Error {
 public:
  using Error::Error;
};

// Read that requires a sealed graph attempted during the build phase.
class NotSealed : public Error {
 public:
  using Error::Error;
};

// query language

class LexError : public Error {
 public:
  LexError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset,
             std::vector<std::string> expected = {})
      : Error(what), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Variable used before any pattern, WITH or UNWIND binds it.
class UnboundVariable : public Error {
 public:
  using Error::Error;
};

// Well-formed query that cannot be given a meaning (e.g. an aggregate in
// WHERE, an unaliased WITH expression, a variable used as node and edge).
class SemanticError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class RowLimitExceeded : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

// bulk import

class ManifestInvalid : public Error {
 public:
  using Error::Error;
};

class HeaderMismatch : public Error {
 public:
  using Error::Error;
};

class ScriptParseError : public Error {
 public:
  ScriptParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// id resolution

class InvalidId : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class Upstream : public Error {
 public:
  using Error::Error;
};

class MalformedResponse : public Error {
 public:
  using Error::Error;
};

// analytics

class AuthorNotFound : public Error {
 public:
  using Error::Error;
};

class AmbiguousName : public Error {
 public:
  using Error::Error;
};

class EntityNotFound : public Error {
 public:
  using Error::Error;
};

class PaperNotFound : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

class BadPattern : public Error {
 public:
  using Error::Error;
};

// Metric whose defining set is empty (CD index with no citers).
class Undefined : public Error {
 public:
  using Error::Error;
};

}  // namespace litgraph
