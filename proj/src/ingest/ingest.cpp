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

#include "litgraph/ingest/ingest.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "ingest/csv.hpp"

namespace litgraph::ingest {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<ColumnType> parse_type(std::string_view tag) {
  if (tag == "string") return ColumnType::String;
  if (tag == "int") return ColumnType::Int;
  if (tag == "float") return ColumnType::Float;
  if (tag == "boolean") return ColumnType::Boolean;
  return std::nullopt;
}

SectionSpec parse_spec(const nlohmann::json& section, const std::string& where,
                       std::vector<std::string> keys) {
  if (!section.contains("columns") || !section["columns"].is_array())
    throw ManifestInvalid(where + ": missing \"columns\"");
  SectionSpec spec;
  spec.key_columns = keys;
  std::set<std::string> seen;
  for (const auto& col : section["columns"]) {
    if (!col.is_string()) throw ManifestInvalid(where + ": column names must be strings");
    std::string text = col.get<std::string>();
    if (!seen.insert(text.substr(0, text.find(':'))).second)
      throw ManifestInvalid(where + ": duplicate column \"" + text + "\"");
    spec.header.push_back(text);
    auto k = std::find(keys.begin(), keys.end(), text);
    if (k != keys.end()) {
      keys.erase(k);
      spec.columns.emplace_back();
      continue;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
      throw ManifestInvalid(where + ": column \"" + text + "\" needs a name:type tag");
    auto type = parse_type(std::string_view(text).substr(colon + 1));
    if (!type)
      throw ManifestInvalid(where + ": bad type tag in column \"" + text + "\"");
    spec.columns.push_back(ColumnSpec{text.substr(0, colon), *type});
  }
  if (!keys.empty())
    throw ManifestInvalid(where + ": missing key column \"" + keys.front() + "\"");
  return spec;
}

std::vector<std::string> parse_files(const nlohmann::json& section,
                                     const std::string& where) {
  std::vector<std::string> files;
  if (!section.contains("files")) return files;
  if (!section["files"].is_array()) throw ManifestInvalid(where + ": \"files\" must be a list");
  for (const auto& f : section["files"]) {
    if (!f.is_string()) throw ManifestInvalid(where + ": file names must be strings");
    files.push_back(f.get<std::string>());
  }
  return files;
}

std::string label_of(const nlohmann::json& section, const std::string& where) {
  if (!section.is_object() || !section.contains("label") || !section["label"].is_string())
    throw ManifestInvalid(where + ": missing \"label\"");
  return section["label"].get<std::string>();
}

std::optional<PropertyValue> parse_cell(const CsvCell& cell, ColumnType type) {
  const std::string& t = cell.text;
  switch (type) {
    case ColumnType::String:
      return PropertyValue(t);
    case ColumnType::Int: {
      std::int64_t v = 0;
      auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || end != t.data() + t.size()) return std::nullopt;
      return PropertyValue(v);
    }
    case ColumnType::Float: {
      double v = 0;
      auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (t.empty() || ec != std::errc() || end != t.data() + t.size()) return std::nullopt;
      return PropertyValue(v);
    }
    case ColumnType::Boolean:
      if (t == "true") return PropertyValue(true);
      if (t == "false") return PropertyValue(false);
      return std::nullopt;
  }
  return std::nullopt;
}

std::string iso_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string_view to_string(ColumnType t) {
  switch (t) {
    case ColumnType::String:
      return "string";
    case ColumnType::Int:
      return "int";
    case ColumnType::Float:
      return "float";
    case ColumnType::Boolean:
      return "boolean";
  }
  return "?";
}

ImportManifest parse_manifest(const nlohmann::json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw ManifestInvalid("manifest must be a JSON object");
  ImportManifest m;
  m.base_dir = base_dir;
  std::set<NodeLabel> node_labels;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw ManifestInvalid("\"nodes\" must be a list");
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
      const auto& s = doc["nodes"][i];
      std::string where = "nodes[" + std::to_string(i) + "]";
      std::string name = label_of(s, where);
      auto label = parse_node_label(name);
      if (!label) throw ManifestInvalid(where + ": unknown node label \"" + name + "\"");
      if (!node_labels.insert(*label).second)
        throw ManifestInvalid(where + ": duplicate section for " + name);
      m.nodes.push_back({*label, parse_files(s, where), parse_spec(s, where, {"id"})});
    }
  }
  std::set<EdgeLabel> edge_labels;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ManifestInvalid("\"edges\" must be a list");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& s = doc["edges"][i];
      std::string where = "edges[" + std::to_string(i) + "]";
      std::string name = label_of(s, where);
      auto label = parse_edge_label(name);
      if (!label) throw ManifestInvalid(where + ": unknown edge label \"" + name + "\"");
      if (!edge_labels.insert(*label).second)
        throw ManifestInvalid(where + ": duplicate section for " + name);
      auto sig = signature(*label);
      for (NodeLabel end : {sig.source, sig.target})
        if (!node_labels.count(end))
          throw ManifestInvalid(where + ": " + name + " refers to " +
                                std::string(to_string(end)) +
                                " ids but no such node section is declared");
      m.edges.push_back({*label, parse_files(s, where), parse_spec(s, where, {"src", "dst"})});
    }
  }
  if (doc.contains("index_script")) {
    if (!doc["index_script"].is_string())
      throw ManifestInvalid("\"index_script\" must be a path");
    m.index_script = doc["index_script"].get<std::string>();
  }
  return m;
}

ImportManifest load_manifest(const fs::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ManifestInvalid("manifest " + path.string() + " is not valid JSON: " + e.what());
  } catch (const Error& e) {
    throw ManifestInvalid(e.what());
  }
  return parse_manifest(doc, path.parent_path());
}

StagedShard import_shard(const fs::path& path, const SectionSpec& spec,
                         std::string display_name) {
  StagedShard out;
  out.file = display_name.empty() ? path.string() : std::move(display_name);
  std::string data = read_file(path);
  CsvReader reader(data);
  CsvRecord rec;
  if (!reader.next(rec)) {
    if (spec.header.empty()) return out;
    throw HeaderMismatch(out.file + ": missing header row");
  }
  std::vector<std::string> header;
  for (auto& c : rec.cells) header.push_back(std::move(c.text));
  if (header != spec.header) {
    std::string want, got;
    for (const auto& h : spec.header) want += (want.empty() ? "" : ",") + h;
    for (const auto& h : header) got += (got.empty() ? "" : ",") + h;
    throw HeaderMismatch(out.file + ": header \"" + got + "\" does not match \"" + want + "\"");
  }

  while (reader.next(rec)) {
    ++out.data_rows;
    if (rec.malformed) {
      out.rejected.push_back({rec.line, "malformed-quote", ""});
      continue;
    }
    if (rec.cells.size() != spec.header.size()) {
      out.rejected.push_back({rec.line, "wrong-arity",
                              std::to_string(rec.cells.size()) + " fields, expected " +
                                  std::to_string(spec.header.size())});
      continue;
    }
    StagedRow row;
    row.line = rec.line;
    row.keys.resize(spec.key_columns.size());
    std::optional<Rejection> reject;
    for (std::size_t i = 0; i < rec.cells.size() && !reject; ++i) {
      const CsvCell& cell = rec.cells[i];
      if (!spec.columns[i]) {
        if (cell.text.empty()) {
          reject = Rejection{rec.line, "missing-key", spec.header[i]};
          break;
        }
        auto k = std::find(spec.key_columns.begin(), spec.key_columns.end(), spec.header[i]);
        row.keys[k - spec.key_columns.begin()] = cell.text;
        continue;
      }
      if (cell.text.empty() && !cell.quoted) continue;  // absent property
      auto value = parse_cell(cell, spec.columns[i]->type);
      if (!value) {
        reject = Rejection{rec.line, "bad-value", spec.header[i] + " = \"" + cell.text + "\""};
        break;
      }
      row.props.emplace(spec.columns[i]->name, std::move(*value));
    }
    if (reject) {
      out.rejected.push_back(std::move(*reject));
      continue;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json counts_json(const GraphCounts& counts) {
  nlohmann::ordered_json nodes, edges;
  for (NodeLabel l : kAllNodeLabels) nodes[std::string(to_string(l))] = counts.node(l);
  for (EdgeLabel l : kAllEdgeLabels) edges[std::string(to_string(l))] = counts.edge(l);
  return {{"nodes", nodes}, {"edges", edges}};
}

nlohmann::ordered_json to_json(const ImportReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["counts"] = counts_json(report.counts);
  j["total_rows"] = report.total_rows;
  j["accepted"] = report.accepted;
  j["rejected"] = report.rejected;
  auto files = nlohmann::ordered_json::array();
  for (const auto& f : report.files) {
    auto rejections = nlohmann::ordered_json::array();
    for (const auto& r : f.rejections)
      rejections.push_back({{"line", r.line}, {"reason", r.reason}, {"detail", r.detail}});
    files.push_back({{"section", f.section},
                     {"file", f.file},
                     {"rows", f.rows},
                     {"accepted", f.accepted},
                     {"rejected", f.rejections.size()},
                     {"rejections", rejections}});
  }
  j["files"] = files;
  if (with_timing) {
    j["durations_ms"] = {{"parse", report.durations.parse_ms},
                         {"merge", report.durations.merge_ms},
                         {"build", report.durations.build_ms},
                         {"index", report.durations.index_ms}};
    j["built_at"] = report.built_at;
  }
  return j;
}

ImportResult import_bulk(const ImportManifest& manifest, std::size_t parallelism) {
  if (parallelism == 0) parallelism = 1;

  struct Task {
    const SectionSpec* spec;
    std::string section;
    std::string file;
  };
  std::vector<Task> tasks;
  for (const auto& s : manifest.nodes)
    for (const auto& f : s.files) tasks.push_back({&s.spec, std::string(to_string(s.label)), f});
  for (const auto& s : manifest.edges)
    for (const auto& f : s.files) tasks.push_back({&s.spec, std::string(to_string(s.label)), f});

  // Parse: shards are independent; each worker writes only its own slots.
  auto parse_start = Clock::now();
  std::vector<StagedShard> staged(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        staged[i] = import_shard(manifest.resolve(tasks[i].file), *tasks[i].spec, tasks[i].file);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::min(parallelism, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  ImportResult result;
  ImportReport& report = result.report;
  report.durations.parse_ms = ms_since(parse_start);

  // Merge and build, in manifest order.
  auto merge_start = Clock::now();
  PropertyGraph& graph = result.graph;
  std::array<std::unordered_map<std::string, NodeId>, kNodeLabelCount> ids;
  std::size_t t = 0;
  for (const auto& s : manifest.nodes) {
    auto& table = ids[index_of(s.label)];
    for (std::size_t f = 0; f < s.files.size(); ++f, ++t) {
      StagedShard& shard = staged[t];
      FileReport fr{tasks[t].section, shard.file, shard.data_rows, 0, std::move(shard.rejected)};
      for (auto& row : shard.rows) {
        if (table.count(row.keys[0])) {
          fr.rejections.push_back({row.line, "duplicate-id", row.keys[0]});
          continue;
        }
        table.emplace(row.keys[0], graph.add_node(s.label, row.props));
        ++fr.accepted;
      }
      shard.rows.clear();
      report.files.push_back(std::move(fr));
    }
  }
  for (const auto& s : manifest.edges) {
    auto sig = signature(s.label);
    const auto& sources = ids[index_of(sig.source)];
    const auto& targets = ids[index_of(sig.target)];
    for (std::size_t f = 0; f < s.files.size(); ++f, ++t) {
      StagedShard& shard = staged[t];
      FileReport fr{tasks[t].section, shard.file, shard.data_rows, 0, std::move(shard.rejected)};
      for (auto& row : shard.rows) {
        auto src = sources.find(row.keys[0]);
        auto dst = targets.find(row.keys[1]);
        if (src == sources.end() || dst == targets.end()) {
          fr.rejections.push_back({row.line, "dangling-ref",
                                   src == sources.end() ? "src " + row.keys[0]
                                                        : "dst " + row.keys[1]});
          continue;
        }
        graph.add_edge(src->second, s.label, dst->second, row.props);
        ++fr.accepted;
      }
      shard.rows.clear();
      report.files.push_back(std::move(fr));
    }
  }
  for (auto& fr : report.files) {
    std::sort(fr.rejections.begin(), fr.rejections.end(),
              [](const Rejection& a, const Rejection& b) { return a.line < b.line; });
    report.total_rows += fr.rows;
    report.accepted += fr.accepted;
    report.rejected += fr.rejections.size();
  }
  report.durations.merge_ms = ms_since(merge_start);

  auto index_start = Clock::now();
  if (manifest.index_script) run_index_script(graph, manifest.resolve(*manifest.index_script));
  report.durations.index_ms = ms_since(index_start);

  auto build_start = Clock::now();
  graph.seal();
  report.durations.build_ms = ms_since(build_start);
  report.counts = graph.counts();
  report.built_at = iso_now();
  return result;
}

void run_index_script_text(PropertyGraph& graph, std::string_view text) {
  static const std::regex line_re(
      R"(^\s*CREATE\s+INDEX\s+ON\s+:\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*\)\s*;?\s*$)",
      std::regex::icase);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re))
      throw ScriptParseError("line " + std::to_string(line_no) +
                                 ": expected CREATE INDEX ON :Label(property)",
                             line_no);
    auto label = parse_node_label(m[1].str());
    if (!label)
      throw ScriptParseError("line " + std::to_string(line_no) + ": unknown label \"" +
                                 m[1].str() + "\"",
                             line_no);
    graph.create_index(*label, m[2].str());
  }
}

void run_index_script(PropertyGraph& graph, const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ScriptParseError(e.what(), 0);
  }
  run_index_script_text(graph, text);
}

std::string canonical_dump(const PropertyGraph& graph) {
  std::string out;
  auto props = [](const PropertyMap& map) {
    std::string s;
    for (const auto& [k, v] : map) s += " " + k + "=" + v.to_literal();
    return s;
  };
  for (std::uint64_t i = 0; i < graph.node_count(); ++i) {
    NodeId n{i};
    out += "n" + std::to_string(i) + " " + std::string(to_string(graph.label(n))) +
           props(graph.properties(n)) + "\n";
  }
  for (std::uint64_t i = 0; i < graph.edge_count(); ++i) {
    EdgeId e{i};
    const auto& rec = graph.edge(e);
    out += "e" + std::to_string(i) + " n" + std::to_string(rec.source.value) + " " +
           std::string(to_string(rec.label)) + " n" + std::to_string(rec.target.value) +
           props(graph.edge_properties(e)) + "\n";
  }
  auto idx = graph.indexes();
  std::sort(idx.begin(), idx.end());
  for (const auto& [label, prop] : idx)
    out += "index " + std::string(to_string(label)) + "." + prop + "\n";
  return out;
}

}  // namespace litgraph::ingest
