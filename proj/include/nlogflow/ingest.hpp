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
#include <vector>

#include "nlogflow/semodel.hpp"

namespace nlogflow {

struct WsdlOperation {
  std::string name;
  std::string input_element;
  std::string output_element;
  std::string fault_element;
};

struct WsdlDoc {
  std::string source_uri;  // where the document came from, if known
  std::string target_ns;
  std::string port_type;
  std::string endpoint;  // soap:address location, when present
  std::vector<WsdlOperation> operations;

  /// The operation to annotate. With an empty selector the document must
  /// declare exactly one operation; otherwise MissingOperation or
  /// AmbiguousOperation is thrown.
  const WsdlOperation& select_operation(std::string_view name = {}) const;
};

struct XsdElement {
  std::string name;
  std::string type_name;  // builtin local name or complex type name
  bool nillable = false;
  int min_occurs = 1;
};

struct XsdSchema {
  // complexType name -> sequence elements, in declaration order
  std::vector<std::pair<std::string, std::vector<XsdElement>>> complex_types;
  // top-level element declarations: element name -> type name
  std::vector<std::pair<std::string, std::string>> elements;

  const std::vector<XsdElement>* find_type(std::string_view name) const;
  /// Resolves a message element name to its complex type (directly or via a
  /// top-level element declaration).
  std::string resolve_element_type(std::string_view element_name) const;
};

struct LeafField {
  std::vector<std::string> path;  // element names from the type root
  std::string name;               // equals path.back()
  std::string xsd_type;           // builtin local name
};

WsdlDoc parse_wsdl(const std::string& xml_text);
XsdSchema parse_xsd(const std::string& xml_text);

/// Depth-first, document-order leaves of a complex type. Throws
/// RecursionError, DuplicateLeafName, or UnknownType.
std::vector<LeafField> flatten_type(const XsdSchema& schema, std::string_view type_name);

/// Annotation skeleton for one wrapped service: one input parameter per
/// input leaf (input1, input2, ... mapped to the leaf elements), one output
/// whose expansions carry one entry per output leaf with the leaf name as
/// markup id, and the grounding filled in from the WSDL. Types default to
/// the builtin xsd leaf types until annotated.
ServiceAnnotation generate_skeleton(const WsdlDoc& wsdl, const XsdSchema& schema,
                                    std::string_view service_name, std::string_view operation = {});

}  // namespace nlogflow
