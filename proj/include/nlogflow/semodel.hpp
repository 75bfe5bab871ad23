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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlogflow/error.hpp"
#include "nlogflow/names.hpp"
#include "nlogflow/ontology.hpp"

namespace nlogflow {

/// Reserved service name for workflow-level parameters.
inline constexpr std::string_view kWorkflowService = "WF";

/// Reference to a parameter: "<service>.<param>", with service "WF" naming
/// a workflow-level parameter.
struct ParamRef {
  std::string service;
  std::string param;

  auto operator<=>(const ParamRef&) const = default;

  bool is_workflow() const { return service == kWorkflowService; }
  std::string to_text() const { return service + "." + param; }
  static ParamRef parse(std::string_view text);  // throws ParseError
};

enum class BuiltinType { String, AnyUri };

/// Parameter type: either a class of the domain ontology or one of the
/// builtin xsd types (string, anyURI).
class TypeRef {
public:
  TypeRef() : TypeRef(builtin(BuiltinType::String)) {}

  static TypeRef builtin(BuiltinType kind);
  static TypeRef ontology_class(ClassId id);

  /// Parses "xsd:string" / "xsd:anyURI" as builtins; everything else is
  /// expanded through the prefix table and treated as an ontology class.
  static TypeRef parse(const std::string& token, const PrefixTable& prefixes);

  bool is_builtin() const { return builtin_.has_value(); }
  bool is_class() const { return !is_builtin(); }
  BuiltinType builtin_kind() const { return *builtin_; }
  const ClassId& class_id() const { return class_; }

  /// Full identifier; builtins map into the xsd namespace.
  std::string iri() const;
  std::string to_text(const PrefixTable& prefixes) const;

  auto operator<=>(const TypeRef&) const = default;

private:
  std::optional<BuiltinType> builtin_;
  ClassId class_;
};

enum class Direction { Input, Output };

struct Parameter {
  std::string name;
  Direction direction = Direction::Input;
  TypeRef type;
  std::vector<ParamRef> links;
};

/// One element embedded in a composite service output: `markup_id` is the
/// element name its value appears under in the result document.
struct NlogParameter {
  std::string name;
  std::string markup_id;
  std::string label;
  TypeRef type;
  std::vector<ParamRef> links;
};

struct OutputDecl {
  Parameter base;                         // direction == Output
  std::vector<NlogParameter> expansions;  // schema sequence order
};

struct Profile {
  std::string name;
  std::optional<ClassId> refers_to;  // data-processing class
  std::vector<ParamRef> has_input;
  std::vector<ParamRef> has_output;
};

/// How to reach the service. Exactly one output message part (the composite
/// result box); every input parameter maps to exactly one part element.
struct Grounding {
  std::string wsdl_uri;
  std::string operation;
  std::string port_type;
  std::string service_namespace;
  std::vector<std::pair<std::string, std::string>> input_parts;  // param -> element
  std::string output_message_part;

  const std::string* part_element(std::string_view param) const;
};

struct ServiceAnnotation {
  std::string name;
  Profile profile;
  std::vector<Parameter> inputs;
  std::vector<OutputDecl> outputs;
  Grounding grounding;

  const Parameter* find_input(std::string_view name) const;
  const OutputDecl* find_output(std::string_view name) const;

  struct ExpansionRef {
    const OutputDecl* output;
    const NlogParameter* expansion;
  };
  std::optional<ExpansionRef> find_expansion(std::string_view name) const;
};

/// Structural validation of one annotation against the ontology. Returns
/// diagnostics; an empty error set means all invariants hold.
std::vector<Diagnostic> validate_annotation(const ServiceAnnotation& service, const Ontology& ontology);

}  // namespace nlogflow
