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

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litgraph/cypher/ast.hpp"
#include "litgraph/cypher/value.hpp"
#include "litgraph/graph.hpp"

namespace litgraph::cypher {

// Upper bound applied to variable-length patterns written without one.
inline constexpr std::int64_t kDefaultMaxHops = 15;

struct ExecutionLimits {
  std::optional<std::size_t> max_rows;
  std::optional<std::chrono::milliseconds> timeout;
  // On hitting max_rows: return the first max_rows rows flagged truncated
  // instead of throwing RowLimitExceeded.
  bool truncate_on_row_limit = false;
};

struct PlanOptions {
  // false forces LabelScan even where an index exists.
  bool use_indexes = true;
};

enum class OperatorKind {
  IndexSeek,
  LabelScan,
  AllNodesScan,
  CheckNode,
  ExpandEdge,
  VarLengthExpand,
  ShortestPathSearch,
  BuildPath,
  Filter,
  Project,
  Aggregate,
  Unwind,
  Sort,
  Limit,
  Produce,
};

std::string_view to_string(OperatorKind kind);

struct PlanStep {
  OperatorKind kind;
  std::string detail;
};

struct PlanData;

// Operator pipeline for one query over one sealed graph. Rows flow from the
// first step to the last. Immutable once built; run() may be called from any
// number of threads.
class PhysicalPlan {
 public:
  explicit PhysicalPlan(std::shared_ptr<const PlanData> data);
  ~PhysicalPlan();
  PhysicalPlan(PhysicalPlan&&) noexcept;
  PhysicalPlan& operator=(PhysicalPlan&&) noexcept;

  const std::vector<PlanStep>& steps() const;
  const std::vector<std::string>& columns() const;
  const std::vector<std::string>& warnings() const;
  std::string explain() const;

  ResultTable run(const ExecutionLimits& limits = {}) const;

 private:
  std::shared_ptr<const PlanData> data_;
};

// Validates bindings and builds the pipeline. Node patterns constrained by
// equality on an indexed (label, property) start from an IndexSeek; each
// pattern is solved from its most selective node (bound > index > label).
// Throws UnboundVariable / SemanticError.
PhysicalPlan plan(const Query& query, const PropertyGraph& graph,
                  const PlanOptions& options = {});

// Parse + plan + run. The graph must be sealed. Throws LexError, ParseError,
// UnboundVariable, SemanticError, EvalError, RowLimitExceeded, Timeout.
ResultTable execute(std::string_view text, const PropertyGraph& graph,
                    const ExecutionLimits& limits = {},
                    const PlanOptions& options = {});
ResultTable execute(const Query& query, const PropertyGraph& graph,
                    const ExecutionLimits& limits = {},
                    const PlanOptions& options = {});

}  // namespace litgraph::cypher
