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

namespace nlogflow::xml {

/// A parsed XML element. Names are kept exactly as written (prefix included);
/// helpers match on the local part so prefixes stay tolerated everywhere.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;

  std::string local_name() const;

  const Element* find_child(std::string_view local) const;
  std::vector<const Element*> children_named(std::string_view local) const;

  /// Depth-first search over this element and its descendants.
  const Element* find_descendant(std::string_view local) const;

  const std::string* attribute(std::string_view name) const;

  /// Namespace this element lives in, resolved from xmlns / xmlns:p
  /// declarations on the element itself and the ancestor chain given.
  std::string resolved_namespace(const std::vector<const Element*>& ancestors) const;
};

/// Parses a well-formed document and returns its root element.
/// Throws Error{XmlError} with the offending line on failure.
Element parse(const std::string& text);

/// Escapes &, <, >, and double quotes for use in text content or attributes.
std::string escape(std::string_view raw);

}  // namespace nlogflow::xml
