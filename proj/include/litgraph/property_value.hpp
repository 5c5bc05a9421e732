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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace litgraph {

// A property literal. Structural equality (operator==) is what containers and
// tests use; filter semantics (null never equal, type-strict) live in
// filter_equals / filter_compare.
class PropertyValue {
 public:
  enum class Type { Null, Text, Integer, Real, Boolean };

  PropertyValue() = default;
  PropertyValue(std::string text) : v_(std::move(text)) {}
  PropertyValue(const char* text) : v_(std::string(text)) {}
  PropertyValue(std::int64_t i) : v_(i) {}
  PropertyValue(int i) : v_(static_cast<std::int64_t>(i)) {}
  PropertyValue(double d) : v_(d) {}
  PropertyValue(bool b) : v_(b) {}

  static PropertyValue null() { return PropertyValue(); }

  Type type() const { return static_cast<Type>(v_.index()); }
  bool is_null() const { return type() == Type::Null; }
  bool is_text() const { return type() == Type::Text; }
  bool is_integer() const { return type() == Type::Integer; }
  bool is_real() const { return type() == Type::Real; }
  bool is_boolean() const { return type() == Type::Boolean; }
  bool is_number() const { return is_integer() || is_real(); }

  const std::string& as_text() const { return std::get<std::string>(v_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  bool as_boolean() const { return std::get<bool>(v_); }
  double as_number() const {
    return is_integer() ? static_cast<double>(as_integer()) : as_real();
  }

  bool operator==(const PropertyValue&) const = default;

  // Cypher-style literal rendering: strings quoted and escaped.
  std::string to_literal() const;
  // Plain rendering used in tables: strings unquoted.
  std::string to_display() const;

  std::size_t hash() const;

 private:
  std::variant<std::monostate, std::string, std::int64_t, double, bool> v_;
};

using PropertyMap = std::map<std::string, PropertyValue>;

// Tri-valued result of a filter comparison; nullopt means "unknown" (null).
using Truth = std::optional<bool>;

// Type-strict equality with null semantics: null (on either side) -> unknown,
// differing types -> false.
Truth filter_equals(const PropertyValue& a, const PropertyValue& b);

// Ordering comparison for <, >, <=, >=. Numbers compare numerically across
// integer/real, text lexicographically (bytewise), booleans false < true.
// Null or mismatched types -> nullopt.
std::optional<int> filter_compare(const PropertyValue& a,
                                  const PropertyValue& b);

// Total order over all property values (used for sorting and grouping):
// text < boolean < number < null; numbers numerically, integer before real on
// numeric ties.
int total_compare(const PropertyValue& a, const PropertyValue& b);

std::string_view type_name(PropertyValue::Type t);

// Quote and escape a string as a query-language string literal.
std::string quote_string(std::string_view s);

}  // namespace litgraph

template <>
struct std::hash<litgraph::PropertyValue> {
  std::size_t operator()(const litgraph::PropertyValue& v) const noexcept {
    return v.hash();
  }
};
