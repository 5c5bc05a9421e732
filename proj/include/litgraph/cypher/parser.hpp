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

#include <string_view>

#include "litgraph/cypher/ast.hpp"

namespace litgraph::cypher {

// Parses one statement of the supported subset:
//
//   query      := matchPart (withPart matchPart?)* returnClause orderBy? limit?
//   matchPart  := ("MATCH" patternList ("WHERE" expr)?)+
//   withPart   := "WITH" items ("UNWIND" expr "AS" ident)?
//   pattern    := (ident "=")? (chain | "(" chain ")" | "shortestPath" "(" chain ")")
//   chain      := nodePat (relPat nodePat)*
//   relPat     := ("-"|"<-") "[" ident? (":" label)? range? propMap? "]" ("-"|"->")
//   range      := "*" int? (".." int?)?
//
// Throws LexError or ParseError (offset plus expected tokens).
Query parse(std::string_view text);

// Binding and well-formedness checks shared by the planner and the reference
// executor. Throws UnboundVariable or SemanticError.
void validate(const Query& query);

}  // namespace litgraph::cypher
