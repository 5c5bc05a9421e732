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

#include "litgraph/regex.hpp"

#include "litgraph/errors.hpp"

namespace litgraph {

WholeStringRegex::WholeStringRegex(std::string_view pattern)
    : pattern_(pattern) {
  auto flags = std::regex::ECMAScript;
  std::string_view body = pattern;
  if (body.substr(0, 4) == "(?i)") {
    flags |= std::regex::icase;
    body.remove_prefix(4);
  }
  try {
    regex_ = std::regex(std::string(body), flags);
  } catch (const std::regex_error& e) {
    throw BadPattern("invalid regular expression \"" + pattern_ + "\": " +
                     e.what());
  }
}

bool WholeStringRegex::matches(std::string_view subject) const {
  return std::regex_match(subject.begin(), subject.end(), regex_);
}

}  // namespace litgraph
