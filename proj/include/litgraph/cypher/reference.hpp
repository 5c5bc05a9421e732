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
#include <string_view>

#include "litgraph/cypher/ast.hpp"
#include "litgraph/cypher/value.hpp"
#include "litgraph/graph.hpp"

namespace litgraph::cypher {

struct ReferenceOptions {
  // Abort with OracleTooLarge after this many node bindings.
  std::size_t max_node_bindings = 10000;
};

// Brute-force evaluator: nested loops over every node and edge, no planning,
// no indexes, WHERE applied after matching. Slow on purpose; used to check
// execute().
ResultTable execute_reference(const Query& query, const PropertyGraph& graph,
                              const ReferenceOptions& options = {});
ResultTable execute_reference(std::string_view text, const PropertyGraph& graph,
                              const ReferenceOptions& options = {});

}  // namespace litgraph::cypher
