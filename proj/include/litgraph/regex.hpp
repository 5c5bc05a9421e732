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

#include <regex>
#include <string>
#include <string_view>

namespace litgraph {

// Regular expression matched against the whole subject string, as the
// query language's `=~` does. A leading `(?i)` turns on case-insensitive
// matching. Throws BadPattern on a malformed expression.
class WholeStringRegex {
 public:
  explicit WholeStringRegex(std::string_view pattern);

  bool matches(std::string_view subject) const;
  const std::string& pattern() const { return pattern_; }

 private:
  std::string pattern_;
  std::regex regex_;
};

}  // namespace litgraph
