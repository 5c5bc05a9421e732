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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "litgraph/graph.hpp"
#include "json.hpp"

namespace litgraph::ingest {

enum class ColumnType { String, Int, Float, Boolean };

std::string_view to_string(ColumnType t);

// A typed property column, written `name:type` in headers.
struct ColumnSpec {
  std::string name;
  ColumnType type;
};

// Header layout shared by every shard of one section. Node sections have the
// single key column `id`; edge sections have `src` and `dst`.
struct SectionSpec {
  std::vector<std::string> header;
  std::vector<std::string> key_columns;
  // Parallel to header: property spec for property columns, unset for keys.
  std::vector<std::optional<ColumnSpec>> columns;
};

struct NodeSection {
  NodeLabel label;
  std::vector<std::string> files;  // as written, relative to the manifest
  SectionSpec spec;
};

struct EdgeSection {
  EdgeLabel label;
  std::vector<std::string> files;
  SectionSpec spec;
};

struct ImportManifest {
  std::filesystem::path base_dir;
  std::vector<NodeSection> nodes;
  std::vector<EdgeSection> edges;
  std::optional<std::string> index_script;

  std::filesystem::path resolve(const std::string& file) const {
    return base_dir / file;
  }
};

// Throws ManifestInvalid.
ImportManifest load_manifest(const std::filesystem::path& path);
ImportManifest parse_manifest(const nlohmann::json& doc,
                              const std::filesystem::path& base_dir);

struct Rejection {
  std::size_t line;  // physical line where the record starts; header is 1
  // wrong-arity, malformed-quote, missing-key, bad-value, duplicate-id or
  // dangling-ref.
  std::string reason;
  std::string detail;
};

struct StagedRow {
  std::vector<std::string> keys;  // id, or src and dst
  PropertyMap props;
  std::size_t line;
};

struct StagedShard {
  std::string file;
  std::size_t data_rows = 0;
  std::vector<StagedRow> rows;
  std::vector<Rejection> rejected;
};

// Parses one CSV shard against its section's header. Malformed rows are
// rejected with their line number. Throws HeaderMismatch.
StagedShard import_shard(const std::filesystem::path& path,
                         const SectionSpec& spec, std::string display_name = {});

struct FileReport {
  std::string section;
  std::string file;
  std::size_t rows = 0;
  std::size_t accepted = 0;
  std::vector<Rejection> rejections;
};

struct Durations {
  double parse_ms = 0;
  double merge_ms = 0;
  double build_ms = 0;
  double index_ms = 0;
};

struct ImportReport {
  GraphCounts counts;
  std::vector<FileReport> files;
  std::size_t total_rows = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  Durations durations;
  std::string built_at;  // UTC, ISO 8601
};

// Timing fields (durations, built_at) are left out when with_timing is false,
// which makes reports from different runs comparable byte for byte.
nlohmann::ordered_json to_json(const ImportReport& report, bool with_timing = true);
nlohmann::ordered_json counts_json(const GraphCounts& counts);

struct ImportResult {
  PropertyGraph graph;
  ImportReport report;
};

// Parses shards on up to `parallelism` threads, then merges in manifest order
// (first occurrence of a node id wins), builds, indexes and seals.
ImportResult import_bulk(const ImportManifest& manifest, std::size_t parallelism = 1);

// Applies `CREATE INDEX ON :Label(property)` lines. Throws ScriptParseError.
void run_index_script(PropertyGraph& graph, const std::filesystem::path& path);
void run_index_script_text(PropertyGraph& graph, std::string_view text);

// Stable text rendering of a whole graph (nodes, edges, properties,
// indexes) for comparing builds.
std::string canonical_dump(const PropertyGraph& graph);

}  // namespace litgraph::ingest
