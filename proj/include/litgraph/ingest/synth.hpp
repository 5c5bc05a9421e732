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

#include <cstdint>
#include <filesystem>

#include "litgraph/graph.hpp"

namespace litgraph::ingest {

// Synthetic scholarly corpus written as sharded CSVs plus manifest and index
// script. At scale 1.0: 100K nodes and 1M edges with the label mix of a
// citation-heavy literature graph. CITES always points from a later paper to
// an earlier one, so the citation graph is acyclic.
struct SynthOptions {
  double scale = 1.0;
  std::uint64_t seed = 42;
  std::size_t shards = 4;
};

struct SynthCorpus {
  std::filesystem::path manifest;
  GraphCounts expected;
};

SynthCorpus write_synthetic_corpus(const std::filesystem::path& dir,
                                   const SynthOptions& options = {});

}  // namespace litgraph::ingest
