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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace litgraph::cypher {

enum class Keyword {
  Match,
  Where,
  Return,
  With,
  As,
  Unwind,
  Order,
  By,
  Desc,
  Asc,
  Limit,
  And,
};

enum class TokenKind {
  Keyword,
  Identifier,
  String,
  Integer,
  Float,
  Parameter,  // $name, substituted before parsing
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Dot,
  DotDot,
  Dash,
  Arrow,      // ->
  LeftArrow,  // <-
  Eq,
  RegexMatch,  // =~
  Lt,
  Gt,
  Le,
  Ge,
  Star,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  Keyword keyword = Keyword::Match;  // valid when kind == Keyword
  // Identifier/parameter name, decoded string contents, or number spelling.
  std::string text;
  std::int64_t integer = 0;
  double real = 0;
  // Byte span in the source.
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Splits a statement into tokens, skipping whitespace and // line comments.
// Keywords are case-insensitive. The result has no End token.
// Throws LexError (with byte offset) on an unterminated string or an
// illegal character.
std::vector<Token> tokenize(std::string_view text);

std::string_view to_string(Keyword k);
std::string_view describe(TokenKind k);

}  // namespace litgraph::cypher
