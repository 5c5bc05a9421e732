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

#include "litgraph/property_value.hpp"

#include <cmath>
#include <cstdio>

namespace litgraph {

namespace {

std::string format_real(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  std::string s(buf);
  // Keep a decimal point so the literal re-lexes as a real.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

int type_rank(PropertyValue::Type t) {
  switch (t) {
    case PropertyValue::Type::Text:
      return 0;
    case PropertyValue::Type::Boolean:
      return 1;
    case PropertyValue::Type::Integer:
    case PropertyValue::Type::Real:
      return 2;
    case PropertyValue::Type::Null:
      return 3;
  }
  return 3;
}

template <typename T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

}  // namespace

std::string quote_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string PropertyValue::to_literal() const {
  switch (type()) {
    case Type::Null:
      return "null";
    case Type::Text:
      return quote_string(as_text());
    case Type::Integer:
      return std::to_string(as_integer());
    case Type::Real:
      return format_real(as_real());
    case Type::Boolean:
      return as_boolean() ? "true" : "false";
  }
  return "null";
}

std::string PropertyValue::to_display() const {
  if (is_text()) return as_text();
  return to_literal();
}

std::size_t PropertyValue::hash() const {
  std::size_t seed = v_.index() * 0x9e3779b97f4a7c15ULL;
  std::size_t h = 0;
  switch (type()) {
    case Type::Null:
      break;
    case Type::Text:
      h = std::hash<std::string>{}(as_text());
      break;
    case Type::Integer:
      h = std::hash<std::int64_t>{}(as_integer());
      break;
    case Type::Real:
      h = std::hash<double>{}(as_real());
      break;
    case Type::Boolean:
      h = as_boolean() ? 1 : 2;
      break;
  }
  return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Truth filter_equals(const PropertyValue& a, const PropertyValue& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.type() != b.type()) return false;
  return a == b;
}

std::optional<int> filter_compare(const PropertyValue& a,
                                  const PropertyValue& b) {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.is_number() && b.is_number()) {
    if (a.is_integer() && b.is_integer())
      return three_way(a.as_integer(), b.as_integer());
    double x = a.as_number(), y = b.as_number();
    if (std::isnan(x) || std::isnan(y)) return std::nullopt;
    return three_way(x, y);
  }
  if (a.type() != b.type()) return std::nullopt;
  if (a.is_text()) return three_way(a.as_text(), b.as_text());
  if (a.is_boolean())
    return three_way(static_cast<int>(a.as_boolean()),
                     static_cast<int>(b.as_boolean()));
  return std::nullopt;
}

int total_compare(const PropertyValue& a, const PropertyValue& b) {
  int ra = type_rank(a.type()), rb = type_rank(b.type());
  if (ra != rb) return three_way(ra, rb);
  switch (a.type()) {
    case PropertyValue::Type::Null:
      return 0;
    case PropertyValue::Type::Text:
      return three_way(a.as_text(), b.as_text());
    case PropertyValue::Type::Boolean:
      return three_way(static_cast<int>(a.as_boolean()),
                       static_cast<int>(b.as_boolean()));
    case PropertyValue::Type::Integer:
    case PropertyValue::Type::Real: {
      if (a.is_integer() && b.is_integer())
        return three_way(a.as_integer(), b.as_integer());
      double x = a.as_number(), y = b.as_number();
      // NaN sorts after every other number.
      bool nx = std::isnan(x), ny = std::isnan(y);
      if (nx || ny) return three_way(static_cast<int>(nx), static_cast<int>(ny));
      if (x != y) return three_way(x, y);
      return three_way(static_cast<int>(a.is_real()),
                       static_cast<int>(b.is_real()));
    }
  }
  return 0;
}

std::string_view type_name(PropertyValue::Type t) {
  switch (t) {
    case PropertyValue::Type::Null:
      return "null";
    case PropertyValue::Type::Text:
      return "string";
    case PropertyValue::Type::Integer:
      return "int";
    case PropertyValue::Type::Real:
      return "float";
    case PropertyValue::Type::Boolean:
      return "boolean";
  }
  return "null";
}

}  // namespace litgraph
