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

#include "nlogflow/ingest.hpp"

#include <set>

#include "nlogflow/error.hpp"
#include "nlogflow/xml.hpp"

namespace nlogflow {

namespace {

std::string strip_prefix(const std::string& qname) {
  auto colon = qname.find(':');
  return colon == std::string::npos ? qname : qname.substr(colon + 1);
}

std::string attr_or(const xml::Element& element, std::string_view name, std::string fallback = {}) {
  const std::string* value = element.attribute(name);
  return value != nullptr ? *value : std::move(fallback);
}

}  // namespace

const WsdlOperation& WsdlDoc::select_operation(std::string_view name) const {
  if (operations.empty()) throw Error(ErrorKind::MissingOperation, "WSDL declares no operation");
  if (name.empty()) {
    if (operations.size() > 1)
      throw Error(ErrorKind::AmbiguousOperation,
                  "WSDL declares " + std::to_string(operations.size()) +
                      " operations; select one explicitly");
    return operations.front();
  }
  for (const WsdlOperation& op : operations) {
    if (op.name == name) return op;
  }
  throw Error(ErrorKind::MissingOperation, "operation '" + std::string(name) + "' not found");
}

WsdlDoc parse_wsdl(const std::string& xml_text) {
  xml::Element root = xml::parse(xml_text);
  if (root.local_name() != "definitions")
    throw Error(ErrorKind::XmlError, "expected a WSDL 'definitions' document, got '" + root.name + "'");

  WsdlDoc doc;
  doc.target_ns = attr_or(root, "targetNamespace");

  // message name -> element local name of its (single) part
  std::vector<std::pair<std::string, std::string>> messages;
  for (const xml::Element& child : root.children) {
    if (child.local_name() != "message") continue;
    std::string name = attr_or(child, "name");
    const xml::Element* part = child.find_child("part");
    if (part == nullptr) continue;
    messages.emplace_back(name, strip_prefix(attr_or(*part, "element")));
  }
  auto element_of = [&messages](const std::string& message_ref) -> std::string {
    std::string wanted = strip_prefix(message_ref);
    for (const auto& [name, element] : messages) {
      if (name == wanted) return element;
    }
    throw Error(ErrorKind::XmlError, "WSDL references undeclared message '" + message_ref + "'");
  };

  for (const xml::Element& child : root.children) {
    if (child.local_name() != "portType") continue;
    doc.port_type = attr_or(child, "name");
    for (const xml::Element& node : child.children) {
      if (node.local_name() != "operation") continue;
      WsdlOperation op;
      op.name = attr_or(node, "name");
      if (const xml::Element* input = node.find_child("input"))
        op.input_element = element_of(attr_or(*input, "message"));
      if (const xml::Element* output = node.find_child("output"))
        op.output_element = element_of(attr_or(*output, "message"));
      if (const xml::Element* fault = node.find_child("fault"))
        op.fault_element = element_of(attr_or(*fault, "message"));
      doc.operations.push_back(std::move(op));
    }
  }
  if (doc.operations.empty()) throw Error(ErrorKind::MissingOperation, "WSDL declares no operation");

  if (const xml::Element* address = root.find_descendant("address"))
    doc.endpoint = attr_or(*address, "location");
  return doc;
}

namespace {

XsdElement parse_sequence_element(const xml::Element& node) {
  static const std::set<std::string> unsupported = {"choice", "all", "any", "attribute", "group"};
  if (unsupported.count(node.local_name()) != 0)
    throw Error(ErrorKind::UnsupportedConstruct, "xs:" + node.local_name() + " is not supported");
  if (node.local_name() != "element")
    throw Error(ErrorKind::UnsupportedConstruct, "xs:" + node.local_name() + " inside a sequence");

  XsdElement element;
  element.name = attr_or(node, "name");
  std::string type = attr_or(node, "type");
  if (type.empty())
    throw Error(ErrorKind::UnsupportedConstruct,
                "inline type on element '" + element.name + "' is not supported");
  element.type_name = strip_prefix(type);
  element.nillable = attr_or(node, "nillable") == "true";
  std::string min_occurs = attr_or(node, "minOccurs", "1");
  element.min_occurs = min_occurs.empty() ? 1 : std::stoi(min_occurs);
  return element;
}

}  // namespace

const std::vector<XsdElement>* XsdSchema::find_type(std::string_view name) const {
  for (const auto& [type_name, elements] : complex_types) {
    if (type_name == name) return &elements;
  }
  return nullptr;
}

std::string XsdSchema::resolve_element_type(std::string_view element_name) const {
  for (const auto& [name, type] : elements) {
    if (name == element_name) return type;
  }
  if (find_type(element_name) != nullptr) return std::string(element_name);
  throw Error(ErrorKind::UnknownType, "schema has no element or type named '" + std::string(element_name) + "'");
}

XsdSchema parse_xsd(const std::string& xml_text) {
  xml::Element parsed = xml::parse(xml_text);
  const xml::Element* schema = parsed.find_descendant("schema");
  if (schema == nullptr) throw Error(ErrorKind::XmlError, "document contains no xs:schema");

  XsdSchema out;
  for (const xml::Element& child : schema->children) {
    std::string local = child.local_name();
    if (local == "element") {
      std::string type = attr_or(child, "type");
      if (type.empty())
        throw Error(ErrorKind::UnsupportedConstruct,
                    "inline type on element '" + attr_or(child, "name") + "' is not supported");
      out.elements.emplace_back(attr_or(child, "name"), strip_prefix(type));
    } else if (local == "complexType") {
      std::string name = attr_or(child, "name");
      std::vector<XsdElement> elements;
      for (const xml::Element& body : child.children) {
        std::string part = body.local_name();
        if (part == "sequence") {
          for (const xml::Element& node : body.children)
            elements.push_back(parse_sequence_element(node));
        } else if (part == "annotation") {
          continue;
        } else {
          throw Error(ErrorKind::UnsupportedConstruct, "xs:" + part + " is not supported");
        }
      }
      out.complex_types.emplace_back(name, std::move(elements));
    } else if (local == "annotation" || local == "import" || local == "include") {
      continue;
    } else {
      throw Error(ErrorKind::UnsupportedConstruct, "xs:" + local + " is not supported");
    }
  }
  return out;
}

namespace {

void flatten_into(const XsdSchema& schema, const std::string& type_name,
                  std::vector<std::string>& path, std::vector<std::string>& type_stack,
                  std::set<std::string>& seen_names, std::vector<LeafField>& out) {
  for (const std::string& open : type_stack) {
    if (open == type_name)
      throw Error(ErrorKind::RecursionError, "complex type '" + type_name + "' nests itself");
  }
  const std::vector<XsdElement>* elements = schema.find_type(type_name);
  if (elements == nullptr) throw Error(ErrorKind::UnknownType, "unknown complex type '" + type_name + "'");

  type_stack.push_back(type_name);
  for (const XsdElement& element : *elements) {
    path.push_back(element.name);
    if (schema.find_type(element.type_name) != nullptr) {
      flatten_into(schema, element.type_name, path, type_stack, seen_names, out);
    } else {
      if (!seen_names.insert(element.name).second)
        throw Error(ErrorKind::DuplicateLeafName,
                    "leaf element name '" + element.name + "' appears more than once");
      out.push_back({path, element.name, element.type_name});
    }
    path.pop_back();
  }
  type_stack.pop_back();
}

BuiltinType builtin_of(const std::string& xsd_type) {
  return xsd_type == "anyURI" ? BuiltinType::AnyUri : BuiltinType::String;
}

}  // namespace

std::vector<LeafField> flatten_type(const XsdSchema& schema, std::string_view type_name) {
  std::vector<LeafField> out;
  std::vector<std::string> path;
  std::vector<std::string> type_stack;
  std::set<std::string> seen_names;
  flatten_into(schema, std::string(type_name), path, type_stack, seen_names, out);
  return out;
}

ServiceAnnotation generate_skeleton(const WsdlDoc& wsdl, const XsdSchema& schema,
                                    std::string_view service_name, std::string_view operation) {
  const WsdlOperation& op = wsdl.select_operation(operation);
  ServiceAnnotation svc;
  svc.name = std::string(service_name);

  std::string input_type = schema.resolve_element_type(op.input_element);
  std::string output_type = schema.resolve_element_type(op.output_element);
  std::vector<LeafField> input_leaves = flatten_type(schema, input_type);
  std::vector<LeafField> output_leaves = flatten_type(schema, output_type);

  // jGASW responses wrap the real outputs in a single box element typed by a
  // generated complex type; that box element is the result message part.
  std::string result_part = op.name + "Result";
  if (const std::vector<XsdElement>* response = schema.find_type(output_type)) {
    if (response->size() == 1 && schema.find_type((*response)[0].type_name) != nullptr)
      result_part = (*response)[0].name;
  }

  int index = 0;
  for (const LeafField& leaf : input_leaves) {
    ++index;
    Parameter p;
    p.name = "input" + std::to_string(index);
    p.direction = Direction::Input;
    p.type = TypeRef::builtin(builtin_of(leaf.xsd_type));
    svc.inputs.push_back(std::move(p));
    svc.grounding.input_parts.emplace_back("input" + std::to_string(index), leaf.name);
  }

  OutputDecl output;
  output.base.name = "output1";
  output.base.direction = Direction::Output;
  output.base.type = TypeRef::builtin(BuiltinType::String);
  for (const LeafField& leaf : output_leaves) {
    NlogParameter e;
    e.name = leaf.name;
    e.markup_id = leaf.name;
    e.type = TypeRef::builtin(builtin_of(leaf.xsd_type));
    output.expansions.push_back(std::move(e));
  }
  svc.outputs.push_back(std::move(output));

  svc.profile.name = svc.name + "_profile";
  for (const Parameter& p : svc.inputs) svc.profile.has_input.push_back({svc.name, p.name});
  for (const OutputDecl& o : svc.outputs) svc.profile.has_output.push_back({svc.name, o.base.name});

  svc.grounding.wsdl_uri = !wsdl.source_uri.empty() ? wsdl.source_uri : wsdl.endpoint;
  svc.grounding.operation = op.name;
  svc.grounding.port_type = wsdl.port_type;
  svc.grounding.service_namespace = wsdl.target_ns;
  svc.grounding.output_message_part = result_part;
  return svc;
}

}  // namespace nlogflow
