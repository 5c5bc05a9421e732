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

#include "litgraph/cypher/parser.hpp"

#include <algorithm>
#include <cctype>

#include "litgraph/cypher/lexer.hpp"
#include "litgraph/errors.hpp"

namespace litgraph::cypher {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    Token end;
    end.kind = TokenKind::End;
    end.offset = text.size();
    tokens_.push_back(end);
    for (const auto& t : tokens_)
      if (t.kind == TokenKind::Parameter)
        throw ParseError("unsubstituted parameter $" + t.text, t.offset);
  }

  Query parse_query() {
    Query q;
    if (!at_keyword(Keyword::Match)) fail("query must start with MATCH", {"MATCH"});
    while (true) {
      while (at_keyword(Keyword::Match)) q.clauses.emplace_back(parse_match());
      if (at_keyword(Keyword::With)) {
        q.clauses.emplace_back(parse_with());
        if (at_keyword(Keyword::Unwind)) q.clauses.emplace_back(parse_unwind());
        continue;
      }
      if (at_keyword(Keyword::Return)) break;
      fail("expected MATCH, WITH or RETURN", {"MATCH", "WITH", "RETURN"});
    }
    advance();
    ReturnClause ret;
    ret.items = parse_items();
    q.clauses.emplace_back(std::move(ret));

    if (at_keyword(Keyword::Order)) {
      advance();
      expect_keyword(Keyword::By);
      do {
        SortItem item;
        item.expr = parse_expr();
        if (at_keyword(Keyword::Desc)) {
          advance();
          item.descending = true;
          item.explicit_direction = true;
        } else if (at_keyword(Keyword::Asc)) {
          advance();
          item.explicit_direction = true;
        }
        q.order_by.push_back(std::move(item));
      } while (accept(TokenKind::Comma));
    }
    if (at_keyword(Keyword::Limit)) {
      advance();
      const Token& t = expect(TokenKind::Integer);
      q.limit = t.integer;
    }
    if (!at(TokenKind::End)) {
      if (peek().kind == TokenKind::Keyword)
        fail("RETURN must be the last clause", {"ORDER BY", "LIMIT", "end of input"});
      fail("unexpected token after RETURN", {"ORDER BY", "LIMIT", "end of input"});
    }
    return q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_keyword(Keyword k) const {
    return at(TokenKind::Keyword) && peek().keyword == k;
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(TokenKind k) {
    if (!at(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End
                            ? "end of input"
                            : "'" + (t.kind == TokenKind::String ? t.text : t.text.empty() ? std::string(describe(t.kind)) : t.text) + "'";
    throw ParseError(message + " at offset " + std::to_string(t.offset) +
                         " (found " + found + ")",
                     t.offset, std::move(expected));
  }

  const Token& expect(TokenKind k) {
    if (!at(k)) fail("expected " + std::string(describe(k)), {std::string(describe(k))});
    return advance();
  }

  void expect_keyword(Keyword k) {
    if (!at_keyword(k))
      fail("expected " + std::string(to_string(k)), {std::string(to_string(k))});
    advance();
  }

  std::string expect_identifier() {
    if (!at(TokenKind::Identifier)) fail("expected identifier", {"identifier"});
    return advance().text;
  }

  MatchClause parse_match() {
    expect_keyword(Keyword::Match);
    MatchClause m;
    do {
      m.patterns.push_back(parse_pattern());
    } while (accept(TokenKind::Comma));
    if (at_keyword(Keyword::Where)) {
      advance();
      m.where = parse_expr();
    }
    return m;
  }

  WithClause parse_with() {
    expect_keyword(Keyword::With);
    WithClause w;
    w.items = parse_items();
    return w;
  }

  UnwindClause parse_unwind() {
    expect_keyword(Keyword::Unwind);
    UnwindClause u;
    u.list = parse_expr();
    expect_keyword(Keyword::As);
    u.variable = expect_identifier();
    return u;
  }

  std::vector<ProjectionItem> parse_items() {
    std::vector<ProjectionItem> items;
    do {
      ProjectionItem item;
      item.expr = parse_expr();
      if (at_keyword(Keyword::As)) {
        advance();
        item.alias = expect_identifier();
      }
      items.push_back(std::move(item));
    } while (accept(TokenKind::Comma));
    return items;
  }

  Pattern parse_pattern() {
    Pattern p;
    if (at(TokenKind::Identifier) && peek(1).kind == TokenKind::Eq) {
      p.path_variable = advance().text;
      advance();
    }
    if (at(TokenKind::Identifier) && lower(peek().text) == "shortestpath" &&
        peek(1).kind == TokenKind::LParen) {
      std::size_t offset = peek().offset;
      advance();
      advance();
      parse_chain(p);
      expect(TokenKind::RParen);
      if (p.rels.size() != 1)
        throw ParseError(
            "shortestPath requires exactly one relationship between two nodes",
            offset, {});
      p.form = PatternForm::ShortestPath;
    } else if (at(TokenKind::LParen) && peek(1).kind == TokenKind::LParen) {
      advance();
      parse_chain(p);
      expect(TokenKind::RParen);
      p.form = PatternForm::Parenthesized;
    } else if (at(TokenKind::LParen)) {
      parse_chain(p);
    } else {
      fail("expected pattern", {"'('", "shortestPath"});
    }
    return p;
  }

  void parse_chain(Pattern& p) {
    p.nodes.push_back(parse_node());
    while (at(TokenKind::Dash) || at(TokenKind::LeftArrow)) {
      p.rels.push_back(parse_rel());
      p.nodes.push_back(parse_node());
    }
  }

  NodePattern parse_node() {
    expect(TokenKind::LParen);
    NodePattern n;
    if (at(TokenKind::Identifier)) n.variable = advance().text;
    if (accept(TokenKind::Colon)) {
      if (!at(TokenKind::Identifier)) fail("expected node label", {"label"});
      const Token& t = peek();
      auto label = parse_node_label(t.text);
      if (!label)
        throw ParseError("unknown node label '" + t.text + "'", t.offset,
                         {"node label"});
      advance();
      n.label = label;
    }
    if (at(TokenKind::LBrace)) n.properties = parse_prop_map();
    expect(TokenKind::RParen);
    return n;
  }

  RelPattern parse_rel() {
    RelPattern r;
    bool left_arrow = at(TokenKind::LeftArrow);
    advance();
    expect(TokenKind::LBracket);
    if (at(TokenKind::Identifier)) r.variable = advance().text;
    if (accept(TokenKind::Colon)) {
      if (!at(TokenKind::Identifier)) fail("expected relationship type", {"type"});
      const Token& t = peek();
      auto label = parse_edge_label(t.text);
      if (!label)
        throw ParseError("unknown relationship type '" + t.text + "'", t.offset,
                         {"relationship type"});
      advance();
      r.label = label;
    }
    if (at(TokenKind::Star)) {
      std::size_t offset = peek().offset;
      advance();
      HopRange range;
      if (at(TokenKind::Integer)) range.min = advance().integer;
      if (accept(TokenKind::DotDot)) {
        range.has_dots = true;
        if (at(TokenKind::Integer)) range.max = advance().integer;
      }
      if (range.min && range.max && *range.min > *range.max)
        throw ParseError("hop range lower bound exceeds upper bound", offset, {});
      r.range = range;
    }
    if (at(TokenKind::LBrace)) r.properties = parse_prop_map();
    expect(TokenKind::RBracket);
    if (left_arrow) {
      if (at(TokenKind::Arrow))
        fail("relationship cannot point both ways", {"'-'"});
      expect(TokenKind::Dash);
      r.direction = RelDirection::In;
    } else if (accept(TokenKind::Arrow)) {
      r.direction = RelDirection::Out;
    } else if (accept(TokenKind::Dash)) {
      r.direction = RelDirection::Undirected;
    } else {
      fail("expected '-' or '->'", {"'-'", "'->'"});
    }
    return r;
  }

  PropertyConstraints parse_prop_map() {
    expect(TokenKind::LBrace);
    PropertyConstraints props;
    do {
      std::string key = property_name();
      expect(TokenKind::Colon);
      props.emplace_back(std::move(key), parse_literal());
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RBrace);
    return props;
  }

  // Property names may collide with keywords (e.g. `n.desc`).
  std::string property_name() {
    if (at(TokenKind::Identifier) || at(TokenKind::Keyword)) return advance().text;
    fail("expected property name", {"identifier"});
  }

  bool at_literal() const {
    switch (peek().kind) {
      case TokenKind::String:
      case TokenKind::Integer:
      case TokenKind::Float:
        return true;
      case TokenKind::Dash:
        return peek(1).kind == TokenKind::Integer || peek(1).kind == TokenKind::Float;
      case TokenKind::Identifier: {
        auto w = lower(peek().text);
        return (w == "true" || w == "false" || w == "null") &&
               peek(1).kind != TokenKind::LParen && peek(1).kind != TokenKind::Dot;
      }
      default:
        return false;
    }
  }

  PropertyValue parse_literal() {
    if (!at_literal()) fail("expected literal", {"string", "integer", "float"});
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::String:
        advance();
        return PropertyValue(t.text);
      case TokenKind::Integer:
        advance();
        return PropertyValue(t.integer);
      case TokenKind::Float:
        advance();
        return PropertyValue(t.real);
      case TokenKind::Dash: {
        advance();
        const Token& num = advance();
        if (num.kind == TokenKind::Integer) return PropertyValue(-num.integer);
        return PropertyValue(-num.real);
      }
      default: {
        auto w = lower(advance().text);
        if (w == "true") return PropertyValue(true);
        if (w == "false") return PropertyValue(false);
        return PropertyValue::null();
      }
    }
  }

  Expression parse_expr() {
    std::vector<Expression> operands;
    operands.push_back(parse_comparison());
    while (at_keyword(Keyword::And)) {
      advance();
      operands.push_back(parse_comparison());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Expression::make_and(std::move(operands));
  }

  Expression parse_comparison() {
    Expression lhs = parse_atom();
    std::optional<CompareOp> op;
    switch (peek().kind) {
      case TokenKind::Eq:
        op = CompareOp::Eq;
        break;
      case TokenKind::Lt:
        op = CompareOp::Lt;
        break;
      case TokenKind::Gt:
        op = CompareOp::Gt;
        break;
      case TokenKind::Le:
        op = CompareOp::Le;
        break;
      case TokenKind::Ge:
        op = CompareOp::Ge;
        break;
      case TokenKind::RegexMatch: {
        advance();
        if (!at(TokenKind::String))
          fail("regular expression must be a string literal", {"string"});
        return Expression::make_regex(std::move(lhs), advance().text);
      }
      default:
        return lhs;
    }
    advance();
    return Expression::make_compare(*op, std::move(lhs), parse_atom());
  }

  Expression parse_atom() {
    if (at_literal()) return Expression::make_literal(parse_literal());
    if (accept(TokenKind::LParen)) {
      Expression inner = parse_expr();
      expect(TokenKind::RParen);
      return inner;
    }
    if (at(TokenKind::Identifier)) {
      const Token& t = peek();
      if (peek(1).kind == TokenKind::LParen) {
        std::string fn = lower(t.text);
        if (fn != "count" && fn != "nodes")
          throw ParseError("unknown function '" + t.text + "'", t.offset,
                           {"count", "nodes"});
        advance();
        advance();
        std::vector<Expression> args;
        args.push_back(parse_expr());
        expect(TokenKind::RParen);
        return Expression::make_call(fn, std::move(args));
      }
      std::string name = advance().text;
      if (accept(TokenKind::Dot))
        return Expression::make_property(std::move(name), property_name());
      return Expression::make_variable(std::move(name));
    }
    fail("expected expression", {"literal", "identifier", "'('"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

enum class VarKind { Node, Edge, EdgeList, Path, Value };

class Scope {
 public:
  std::optional<VarKind> find(const std::string& name) const {
    for (const auto& [n, k] : vars_)
      if (n == name) return k;
    return std::nullopt;
  }
  void bind(const std::string& name, VarKind kind) { vars_.emplace_back(name, kind); }
  void clear() { vars_.clear(); }

 private:
  std::vector<std::pair<std::string, VarKind>> vars_;
};

void check_bound(const Expression& e, const Scope& scope) {
  std::vector<std::string> vars;
  collect_variables(e, vars);
  for (const auto& v : vars)
    if (!scope.find(v)) throw UnboundVariable("variable '" + v + "' is not bound");
}

void check_item_aggregates(const Expression& e) {
  if (e.is_aggregate()) {
    if (contains_aggregate(e.args[0]))
      throw SemanticError("nested aggregate in " + print(e));
    return;
  }
  if (contains_aggregate(e))
    throw SemanticError("aggregate must be a whole projection item: " + print(e));
}

void bind_pattern(const Pattern& p, Scope& scope) {
  auto bind_node = [&](const NodePattern& n) {
    if (!n.variable) return;
    if (auto k = scope.find(*n.variable)) {
      if (*k != VarKind::Node && *k != VarKind::Value)
        throw SemanticError("variable '" + *n.variable + "' is not a node");
      return;
    }
    scope.bind(*n.variable, VarKind::Node);
  };
  for (const auto& n : p.nodes) bind_node(n);
  if (p.form == PatternForm::ShortestPath) {
    const auto& r = p.rels[0];
    if (r.range && r.range->lower() > 1)
      throw SemanticError("shortestPath lower bound must be 0 or 1");
  }
  for (const auto& r : p.rels) {
    if (!r.variable) continue;
    if (scope.find(*r.variable))
      throw SemanticError("relationship variable '" + *r.variable +
                          "' is already bound");
    bool list = r.variable_length() || p.form == PatternForm::ShortestPath;
    scope.bind(*r.variable, list ? VarKind::EdgeList : VarKind::Edge);
  }
  if (p.path_variable) {
    if (scope.find(*p.path_variable))
      throw SemanticError("path variable '" + *p.path_variable +
                          "' is already bound");
    scope.bind(*p.path_variable, VarKind::Path);
  }
}

void project(const std::vector<ProjectionItem>& items, Scope& scope,
             bool require_alias) {
  Scope next;
  for (const auto& item : items) {
    check_bound(item.expr, scope);
    check_item_aggregates(item.expr);
    if (require_alias && !item.alias && item.expr.kind != ExprKind::Variable)
      throw SemanticError("expression in WITH must be aliased: " + print(item.expr));
    std::string name = column_name(item);
    if (next.find(name)) throw SemanticError("duplicate column name '" + name + "'");
    VarKind kind = VarKind::Value;
    if (item.expr.kind == ExprKind::Variable) kind = *scope.find(item.expr.name);
    next.bind(name, kind);
  }
  scope = next;
}

}  // namespace

Query parse(std::string_view text) {
  Parser parser(text);
  return parser.parse_query();
}

void validate(const Query& query) {
  Scope scope;
  for (const auto& clause : query.clauses) {
    if (const auto* m = std::get_if<MatchClause>(&clause)) {
      for (const auto& p : m->patterns) bind_pattern(p, scope);
      if (m->where) {
        check_bound(*m->where, scope);
        if (contains_aggregate(*m->where))
          throw SemanticError("aggregate not allowed in WHERE");
      }
    } else if (const auto* w = std::get_if<WithClause>(&clause)) {
      project(w->items, scope, true);
    } else if (const auto* u = std::get_if<UnwindClause>(&clause)) {
      check_bound(u->list, scope);
      if (contains_aggregate(u->list))
        throw SemanticError("aggregate not allowed in UNWIND");
      if (scope.find(u->variable))
        throw SemanticError("variable '" + u->variable + "' is already bound");
      scope.bind(u->variable, VarKind::Value);
    } else if (const auto* r = std::get_if<ReturnClause>(&clause)) {
      project(r->items, scope, false);
    }
  }
  for (const auto& s : query.order_by) {
    if (scope.find(print(s.expr))) continue;
    check_bound(s.expr, scope);
    if (contains_aggregate(s.expr))
      throw SemanticError("aggregate in ORDER BY must match a returned column");
  }
  if (query.limit && *query.limit < 0) throw SemanticError("LIMIT must be non-negative");
}

}  // namespace litgraph::cypher
