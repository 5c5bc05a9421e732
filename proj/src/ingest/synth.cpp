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

#include "litgraph/ingest/synth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "litgraph/errors.hpp"

namespace litgraph::ingest {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::size_t, kNodeLabelCount> kBaseNodes = {
    50000,  // Paper
    30000,  // Author
    15000,  // Entity
    2000,   // Venue
    1950,   // Affiliation
    50,     // Relation
    1000,   // RelationInstance
};

constexpr std::array<std::size_t, kEdgeLabelCount> kBaseEdges = {
    480000,  // CITES
    150000,  // AUTHORS
    300000,  // MENTIONS
    50000,   // APPEARS_IN
    15000,   // AFFILIATED_WITH
    2000,    // MENTIONS_RELATION
    2000,    // WITH_ENTITY
    1000,    // WITH_RELATIONSHIP
};

const char* const kFirstNames[] = {"Ada",   "Alan",  "Barbara", "Claude", "Donald", "Edsger",
                                   "Frances", "Grace", "John",  "Judea",  "Leslie", "Luke",
                                   "Margaret", "Niklaus", "Regina", "Swabha", "Tony", "Yann"};

const char* const kTerms[] = {"learning", "parsing",   "retrieval", "graphs",   "networks",
                              "inference", "semantics", "vision",    "proteins", "citations",
                              "embeddings", "translation", "cancer",  "genomics", "search"};

std::size_t scaled(std::size_t base, double scale) {
  if (base == 0) return 0;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(base * scale)));
}

std::string prefix_of(NodeLabel l) {
  switch (l) {
    case NodeLabel::Paper: return "P";
    case NodeLabel::Author: return "A";
    case NodeLabel::Entity: return "E";
    case NodeLabel::Venue: return "V";
    case NodeLabel::Affiliation: return "F";
    case NodeLabel::Relation: return "R";
    case NodeLabel::RelationInstance: return "RI";
  }
  return "N";
}

std::string file_stem(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (std::isupper(static_cast<unsigned char>(c)) && !out.empty() && out.back() != '_') out += '_';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Splits `rows` lines across shard files, contiguously.
class ShardWriter {
 public:
  ShardWriter(const fs::path& dir, const std::string& stem, std::string header,
              std::size_t rows, std::size_t shards)
      : dir_(dir), stem_(stem), header_(std::move(header)) {
    shards_ = std::max<std::size_t>(1, std::min(shards, rows));
    per_shard_ = (rows + shards_ - 1) / std::max<std::size_t>(1, shards_);
    if (per_shard_ == 0) per_shard_ = 1;
    open(0);
  }

  void row(const std::string& line) {
    if (written_ == per_shard_ && index_ + 1 < shards_) {
      open(index_ + 1);
    }
    out_ << line << '\n';
    ++written_;
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  void open(std::size_t i) {
    if (out_.is_open()) out_.close();
    index_ = i;
    written_ = 0;
    std::string name = stem_ + "_" + std::to_string(i) + ".csv";
    files_.push_back(name);
    out_.open(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out_) throw Error("cannot write " + (dir_ / name).string());
    out_ << header_ << '\n';
  }

  fs::path dir_;
  std::string stem_;
  std::string header_;
  std::size_t shards_ = 1;
  std::size_t per_shard_ = 1;
  std::size_t index_ = 0;
  std::size_t written_ = 0;
  std::ofstream out_;
  std::vector<std::string> files_;
};

std::string hex40(std::mt19937_64& rng) {
  static const char* digits = "0123456789abcdef";
  std::string s(40, '0');
  for (std::size_t i = 0; i < 40; i += 16) {
    std::uint64_t v = rng();
    for (std::size_t j = i; j < std::min<std::size_t>(40, i + 16); ++j) {
      s[j] = digits[v & 15];
      v >>= 4;
    }
  }
  return s;
}

}  // namespace

SynthCorpus write_synthetic_corpus(const fs::path& dir, const SynthOptions& options) {
  fs::create_directories(dir);
  std::mt19937_64 rng(options.seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  SynthCorpus corpus;
  std::array<std::size_t, kNodeLabelCount> n{};
  for (NodeLabel l : kAllNodeLabels) n[index_of(l)] = scaled(kBaseNodes[index_of(l)], options.scale);
  auto count = [&](NodeLabel l) { return n[index_of(l)]; };
  auto id = [](NodeLabel l, std::size_t i) { return prefix_of(l) + std::to_string(i); };

  nlohmann::ordered_json manifest;
  manifest["nodes"] = nlohmann::ordered_json::array();
  manifest["edges"] = nlohmann::ordered_json::array();
  auto section = [&](const char* key, std::string_view label, const ShardWriter& w,
                     std::vector<std::string> columns) {
    manifest[key].push_back({{"label", std::string(label)}, {"files", w.files()}, {"columns", columns}});
  };

  // Papers are numbered in publication order.
  std::size_t papers = count(NodeLabel::Paper);
  std::vector<int> year(papers);
  {
    std::vector<std::string> cols = {"id", "paper_id:string", "title:string", "year:int"};
    ShardWriter w(dir, "papers", "id,paper_id:string,title:string,year:int", papers, options.shards);
    for (std::size_t i = 0; i < papers; ++i) {
      year[i] = 1970 + static_cast<int>(i * 50 / std::max<std::size_t>(1, papers));
      w.row(id(NodeLabel::Paper, i) + "," + hex40(rng) + ",Synthetic paper " + std::to_string(i) +
            " on " + kTerms[below(std::size(kTerms))] + "," + std::to_string(year[i]));
    }
    section("nodes", "Paper", w, cols);
  }
  {
    ShardWriter w(dir, "authors", "id,author_id:int,first:string,last:string", count(NodeLabel::Author),
                  options.shards);
    for (std::size_t i = 0; i < count(NodeLabel::Author); ++i)
      w.row(id(NodeLabel::Author, i) + "," + std::to_string(1000000 + i) + "," +
            kFirstNames[below(std::size(kFirstNames))] + ",Surname" + std::to_string(i));
    section("nodes", "Author", w, {"id", "author_id:int", "first:string", "last:string"});
  }
  auto named = [&](NodeLabel l, const std::string& stem, const std::string& prop,
                   const std::string& text) {
    ShardWriter w(dir, stem, "id," + prop + ":string", count(l), options.shards);
    for (std::size_t i = 0; i < count(l); ++i)
      w.row(id(l, i) + "," + text + " " + std::to_string(i));
    section("nodes", to_string(l), w, {"id", prop + ":string"});
  };
  named(NodeLabel::Entity, "entities", "name", "Entity");
  named(NodeLabel::Venue, "venues", "text", "Venue");
  named(NodeLabel::Affiliation, "affiliations", "text", "Institute");
  named(NodeLabel::Relation, "relations", "name", "Relation");
  {
    ShardWriter w(dir, "relation_instances", "id", count(NodeLabel::RelationInstance), options.shards);
    for (std::size_t i = 0; i < count(NodeLabel::RelationInstance); ++i)
      w.row(id(NodeLabel::RelationInstance, i));
    section("nodes", "RelationInstance", w, {"id"});
  }
  for (NodeLabel l : kAllNodeLabels) corpus.expected.nodes[index_of(l)] = count(l);

  for (EdgeLabel e : kAllEdgeLabels) {
    EdgeSignature sig = signature(e);
    std::size_t rows = scaled(kBaseEdges[index_of(e)], options.scale);
    std::size_t ns = count(sig.source), nt = count(sig.target);
    if (e == EdgeLabel::CITES && ns < 2) rows = 0;
    bool positioned = e == EdgeLabel::WITH_ENTITY;
    ShardWriter w(dir, file_stem(to_string(e)), positioned ? "src,dst,position:int" : "src,dst",
                  rows, options.shards);
    for (std::size_t k = 0; k < rows; ++k) {
      std::size_t s, t;
      switch (e) {
        case EdgeLabel::CITES:
          s = 1 + below(ns - 1);
          t = below(s);
          break;
        case EdgeLabel::APPEARS_IN:
          // One venue per paper where possible.
          s = k % ns;
          t = below(nt);
          break;
        case EdgeLabel::MENTIONS_RELATION:
          s = below(ns);
          t = k % nt;
          break;
        case EdgeLabel::WITH_ENTITY:
        case EdgeLabel::WITH_RELATIONSHIP:
          s = (k / (positioned ? 2 : 1)) % ns;
          t = below(nt);
          break;
        default:
          s = below(ns);
          t = below(nt);
      }
      std::string line = id(sig.source, s) + "," + id(sig.target, t);
      if (positioned) line += "," + std::to_string(k % 2);
      w.row(line);
    }
    std::vector<std::string> cols = {"src", "dst"};
    if (positioned) cols.push_back("position:int");
    section("edges", to_string(e), w, cols);
    corpus.expected.edges[index_of(e)] = rows;
  }

  {
    std::ofstream idx(dir / "indexes.cypher", std::ios::binary | std::ios::trunc);
    idx << "CREATE INDEX ON :Paper(paper_id)\n"
           "CREATE INDEX ON :Paper(title)\n"
           "CREATE INDEX ON :Paper(year)\n"
           "CREATE INDEX ON :Author(author_id)\n"
           "CREATE INDEX ON :Author(last)\n"
           "CREATE INDEX ON :Entity(name)\n"
           "CREATE INDEX ON :Venue(text)\n";
  }
  manifest["index_script"] = "indexes.cypher";
  corpus.manifest = dir / "manifest.json";
  std::ofstream(corpus.manifest, std::ios::binary | std::ios::trunc) << manifest.dump(2) << '\n';
  return corpus;
}

}  // namespace litgraph::ingest
