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

#include "nlogflow/xml.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <sstream>

#include "nlogflow/error.hpp"

namespace nlogflow::xml {

namespace pt = boost::property_tree;

namespace {

std::string_view strip_prefix(std::string_view name) {
  auto colon = name.find(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

Element convert(const std::string& name, const pt::ptree& node) {
  Element element;
  element.name = name;
  element.text = node.data();
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>") {
      for (const auto& [attr, value] : child) element.attributes.emplace_back(attr, value.data());
    } else if (key == "<xmlcomment>") {
      continue;
    } else {
      element.children.push_back(convert(key, child));
    }
  }
  return element;
}

}  // namespace

std::string Element::local_name() const { return std::string(strip_prefix(name)); }

const Element* Element::find_child(std::string_view local) const {
  for (const auto& child : children) {
    if (strip_prefix(child.name) == local) return &child;
  }
  return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view local) const {
  std::vector<const Element*> out;
  for (const auto& child : children) {
    if (strip_prefix(child.name) == local) out.push_back(&child);
  }
  return out;
}

const Element* Element::find_descendant(std::string_view local) const {
  if (strip_prefix(name) == local) return this;
  for (const auto& child : children) {
    if (const Element* found = child.find_descendant(local)) return found;
  }
  return nullptr;
}

const std::string* Element::attribute(std::string_view wanted) const {
  for (const auto& [attr, value] : attributes) {
    if (attr == wanted) return &value;
  }
  return nullptr;
}

std::string Element::resolved_namespace(const std::vector<const Element*>& ancestors) const {
  auto colon = name.find(':');
  std::string wanted = colon == std::string::npos ? "xmlns" : "xmlns:" + name.substr(0, colon);

  if (const std::string* ns = attribute(wanted)) return *ns;
  for (auto it = ancestors.rbegin(); it != ancestors.rend(); ++it) {
    if (const std::string* ns = (*it)->attribute(wanted)) return *ns;
  }
  return {};
}

Element parse(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace | pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorKind::XmlError, e.message(), static_cast<int>(e.line()));
  }
  for (const auto& [key, node] : tree) {
    if (key == "<xmlattr>" || key == "<xmlcomment>") continue;
    return convert(key, node);
  }
  throw Error(ErrorKind::XmlError, "document has no root element");
}

std::string escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace nlogflow::xml
