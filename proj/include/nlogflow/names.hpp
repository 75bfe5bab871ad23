/*
 * Copyright 2026 the nlogflow authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlogflow {

inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

/// Prefix -> namespace table for CURIE expansion in the line-oriented file
/// formats. Insertion-ordered so serialized output is stable.
class PrefixTable {
public:
  /// Adds or replaces a prefix binding.
  void add(const std::string& prefix, const std::string& uri);

  const std::string* find(std::string_view prefix) const;

  /// Expands one name token to a full identifier:
  ///   <uri>       -> uri
  ///   p:local     -> namespace(p) + local   (unknown p is a ParseError)
  ///   plain token -> unchanged (absolute URIs and bare names pass through)
  std::string expand(const std::string& token) const;

  /// Renders an identifier using the longest matching prefix, `<uri>` when
  /// none matches an absolute URI, or the bare token otherwise.
  std::string compress(const std::string& iri) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Fragment of an identifier after the last '#' or '/'.
std::string local_name(std::string_view iri);

}  // namespace nlogflow
