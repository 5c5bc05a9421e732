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

#include "litgraph/cypher/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "litgraph/errors.hpp"

namespace litgraph::cypher {

namespace {

constexpr Keyword kKeywords[] = {
    Keyword::Match, Keyword::Where, Keyword::Return, Keyword::With,
    Keyword::As,    Keyword::Unwind, Keyword::Order, Keyword::By,
    Keyword::Desc,  Keyword::Asc,   Keyword::Limit, Keyword::And,
};

std::optional<Keyword> keyword_for(std::string_view word) {
  for (Keyword k : kKeywords) {
    auto name = to_string(k);
    if (name.size() != word.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < word.size() && same; ++i)
      same = std::toupper(static_cast<unsigned char>(word[i])) == name[i];
    if (same) return k;
  }
  return std::nullopt;
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string_view to_string(Keyword k) {
  switch (k) {
    case Keyword::Match:
      return "MATCH";
    case Keyword::Where:
      return "WHERE";
    case Keyword::Return:
      return "RETURN";
    case Keyword::With:
      return "WITH";
    case Keyword::As:
      return "AS";
    case Keyword::Unwind:
      return "UNWIND";
    case Keyword::Order:
      return "ORDER";
    case Keyword::By:
      return "BY";
    case Keyword::Desc:
      return "DESC";
    case Keyword::Asc:
      return "ASC";
    case Keyword::Limit:
      return "LIMIT";
    case Keyword::And:
      return "AND";
  }
  return "?";
}

std::string_view describe(TokenKind k) {
  switch (k) {
    case TokenKind::Keyword:
      return "keyword";
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::String:
      return "string";
    case TokenKind::Integer:
      return "integer";
    case TokenKind::Float:
      return "float";
    case TokenKind::Parameter:
      return "parameter";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::LBracket:
      return "'['";
    case TokenKind::RBracket:
      return "']'";
    case TokenKind::LBrace:
      return "'{'";
    case TokenKind::RBrace:
      return "'}'";
    case TokenKind::Colon:
      return "':'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::Dot:
      return "'.'";
    case TokenKind::DotDot:
      return "'..'";
    case TokenKind::Dash:
      return "'-'";
    case TokenKind::Arrow:
      return "'->'";
    case TokenKind::LeftArrow:
      return "'<-'";
    case TokenKind::Eq:
      return "'='";
    case TokenKind::RegexMatch:
      return "'=~'";
    case TokenKind::Lt:
      return "'<'";
    case TokenKind::Gt:
      return "'>'";
    case TokenKind::Le:
      return "'<='";
    case TokenKind::Ge:
      return "'>='";
    case TokenKind::Star:
      return "'*'";
    case TokenKind::End:
      return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](TokenKind kind, std::size_t start, std::size_t len) {
    Token t;
    t.kind = kind;
    t.offset = start;
    t.length = len;
    tokens.push_back(std::move(t));
  };

  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;

    if (ident_start(c)) {
      while (i < n && ident_char(text[i])) ++i;
      auto word = text.substr(start, i - start);
      Token t;
      t.offset = start;
      t.length = i - start;
      if (auto kw = keyword_for(word)) {
        t.kind = TokenKind::Keyword;
        t.keyword = *kw;
      } else {
        t.kind = TokenKind::Identifier;
      }
      t.text = std::string(word);
      tokens.push_back(std::move(t));
      continue;
    }

    if (c == '$') {
      ++i;
      if (i >= n || !ident_start(text[i]))
        throw LexError("expected parameter name after '$'", start);
      while (i < n && ident_char(text[i])) ++i;
      Token t;
      t.kind = TokenKind::Parameter;
      t.text = std::string(text.substr(start + 1, i - start - 1));
      t.offset = start;
      t.length = i - start;
      tokens.push_back(std::move(t));
      continue;
    }

    if (digit(c)) {
      while (i < n && digit(text[i])) ++i;
      bool is_float = false;
      // "1..5" is a range, not a float.
      if (i + 1 < n && text[i] == '.' && digit(text[i + 1])) {
        is_float = true;
        ++i;
        while (i < n && digit(text[i])) ++i;
      }
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && digit(text[j])) {
          is_float = true;
          i = j;
          while (i < n && digit(text[i])) ++i;
        }
      }
      if (i < n && ident_char(text[i]))
        throw LexError("malformed number", start);
      Token t;
      t.offset = start;
      t.length = i - start;
      t.text = std::string(text.substr(start, i - start));
      if (is_float) {
        t.kind = TokenKind::Float;
        t.real = std::strtod(t.text.c_str(), nullptr);
      } else {
        t.kind = TokenKind::Integer;
        auto [ptr, ec] = std::from_chars(t.text.data(),
                                         t.text.data() + t.text.size(), t.integer);
        if (ec != std::errc()) throw LexError("integer out of range", start);
      }
      tokens.push_back(std::move(t));
      continue;
    }

    if (c == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < n) {
        char ch = text[i];
        if (ch == '"') {
          closed = true;
          ++i;
          break;
        }
        if (ch == '\\') {
          if (i + 1 >= n) break;
          char esc = text[i + 1];
          switch (esc) {
            case '"':
              value.push_back('"');
              break;
            case '\\':
              value.push_back('\\');
              break;
            case '\'':
              value.push_back('\'');
              break;
            case 'n':
              value.push_back('\n');
              break;
            case 't':
              value.push_back('\t');
              break;
            case 'r':
              value.push_back('\r');
              break;
            default:
              throw LexError("invalid escape sequence", i);
          }
          i += 2;
          continue;
        }
        value.push_back(ch);
        ++i;
      }
      if (!closed) throw LexError("unterminated string literal", start);
      Token t;
      t.kind = TokenKind::String;
      t.text = std::move(value);
      t.offset = start;
      t.length = i - start;
      tokens.push_back(std::move(t));
      continue;
    }

    auto next_is = [&](char ch) { return i + 1 < n && text[i + 1] == ch; };
    switch (c) {
      case '(':
        push(TokenKind::LParen, start, 1);
        ++i;
        break;
      case ')':
        push(TokenKind::RParen, start, 1);
        ++i;
        break;
      case '[':
        push(TokenKind::LBracket, start, 1);
        ++i;
        break;
      case ']':
        push(TokenKind::RBracket, start, 1);
        ++i;
        break;
      case '{':
        push(TokenKind::LBrace, start, 1);
        ++i;
        break;
      case '}':
        push(TokenKind::RBrace, start, 1);
        ++i;
        break;
      case ':':
        push(TokenKind::Colon, start, 1);
        ++i;
        break;
      case ',':
        push(TokenKind::Comma, start, 1);
        ++i;
        break;
      case '*':
        push(TokenKind::Star, start, 1);
        ++i;
        break;
      case '.':
        if (next_is('.')) {
          push(TokenKind::DotDot, start, 2);
          i += 2;
        } else {
          push(TokenKind::Dot, start, 1);
          ++i;
        }
        break;
      case '-':
        if (next_is('>')) {
          push(TokenKind::Arrow, start, 2);
          i += 2;
        } else {
          push(TokenKind::Dash, start, 1);
          ++i;
        }
        break;
      case '<':
        if (next_is('-')) {
          push(TokenKind::LeftArrow, start, 2);
          i += 2;
        } else if (next_is('=')) {
          push(TokenKind::Le, start, 2);
          i += 2;
        } else {
          push(TokenKind::Lt, start, 1);
          ++i;
        }
        break;
      case '>':
        if (next_is('=')) {
          push(TokenKind::Ge, start, 2);
          i += 2;
        } else {
          push(TokenKind::Gt, start, 1);
          ++i;
        }
        break;
      case '=':
        if (next_is('~')) {
          push(TokenKind::RegexMatch, start, 2);
          i += 2;
        } else {
          push(TokenKind::Eq, start, 1);
          ++i;
        }
        break;
      default:
        throw LexError(std::string("illegal character '") + c + "'", start);
    }
  }
  return tokens;
}

}  // namespace litgraph::cypher
