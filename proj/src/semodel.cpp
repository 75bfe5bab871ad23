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

#include "nlogflow/semodel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nlogflow {

ParamRef ParamRef::parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size())
    throw Error(ErrorKind::ParseError, "expected '<service>.<param>', got '" + std::string(text) + "'");
  return ParamRef{std::string(text.substr(0, dot)), std::string(text.substr(dot + 1))};
}

TypeRef TypeRef::builtin(BuiltinType kind) {
  TypeRef ref;
  ref.builtin_ = kind;
  return ref;
}

TypeRef TypeRef::ontology_class(ClassId id) {
  TypeRef ref;
  ref.builtin_.reset();
  ref.class_ = std::move(id);
  return ref;
}

TypeRef TypeRef::parse(const std::string& token, const PrefixTable& prefixes) {
  std::string iri = prefixes.expand(token);
  if (iri == std::string(kXsdNamespace) + "string") return builtin(BuiltinType::String);
  if (iri == std::string(kXsdNamespace) + "anyURI") return builtin(BuiltinType::AnyUri);
  if (token == "xsd:string") return builtin(BuiltinType::String);
  if (token == "xsd:anyURI") return builtin(BuiltinType::AnyUri);
  return ontology_class(ClassId{std::move(iri)});
}

std::string TypeRef::iri() const {
  if (!is_builtin()) return class_.iri;
  return std::string(kXsdNamespace) + (builtin_kind() == BuiltinType::String ? "string" : "anyURI");
}

std::string TypeRef::to_text(const PrefixTable& prefixes) const {
  if (is_builtin()) return builtin_kind() == BuiltinType::String ? "xsd:string" : "xsd:anyURI";
  return prefixes.compress(class_.iri);
}

const std::string* Grounding::part_element(std::string_view param) const {
  for (const auto& [name, element] : input_parts) {
    if (name == param) return &element;
  }
  return nullptr;
}

const Parameter* ServiceAnnotation::find_input(std::string_view wanted) const {
  for (const Parameter& p : inputs) {
    if (p.name == wanted) return &p;
  }
  return nullptr;
}

const OutputDecl* ServiceAnnotation::find_output(std::string_view wanted) const {
  for (const OutputDecl& o : outputs) {
    if (o.base.name == wanted) return &o;
  }
  return nullptr;
}

std::optional<ServiceAnnotation::ExpansionRef> ServiceAnnotation::find_expansion(std::string_view wanted) const {
  for (const OutputDecl& o : outputs) {
    for (const NlogParameter& e : o.expansions) {
      if (e.name == wanted) return ExpansionRef{&o, &e};
    }
  }
  return std::nullopt;
}

namespace {

void check_type(const std::string& owner, const TypeRef& type, const Ontology& ontology,
                std::vector<Diagnostic>& out) {
  if (type.is_builtin()) return;
  if (!ontology.has_class(type.class_id()))
    out.push_back({Severity::Error, "UnknownType",
                   owner + ": type '" + type.class_id().iri + "' is not declared in the ontology"});
}

}  // namespace

std::vector<Diagnostic> validate_annotation(const ServiceAnnotation& service, const Ontology& ontology) {
  std::vector<Diagnostic> out;
  const std::string& svc = service.name;

  if (svc.empty() || svc == kWorkflowService || svc.find('.') != std::string::npos)
    out.push_back({Severity::Error, "BadServiceName", "service name '" + svc + "' is reserved or malformed"});

  // Parameter names share one namespace per service.
  std::map<std::string, int> names;
  for (const Parameter& p : service.inputs) ++names[p.name];
  for (const OutputDecl& o : service.outputs) {
    ++names[o.base.name];
    for (const NlogParameter& e : o.expansions) ++names[e.name];
  }
  for (const auto& [name, count] : names) {
    if (count > 1)
      out.push_back({Severity::Error, "DuplicateParamName",
                     svc + ": parameter name '" + name + "' is used " + std::to_string(count) + " times"});
  }

  for (const Parameter& p : service.inputs) {
    check_type(svc + "." + p.name, p.type, ontology, out);
    if (!p.links.empty())
      out.push_back({Severity::Error, "InputHasLinks",
                     svc + "." + p.name + ": inputs are link targets, not sources"});
  }

  for (const OutputDecl& o : service.outputs) {
    check_type(svc + "." + o.base.name, o.base.type, ontology, out);
    if (!o.expansions.empty() && !o.base.links.empty())
      out.push_back({Severity::Error, "ExpandedOutputHasLinks",
                     svc + "." + o.base.name + ": expanded outputs route values through their expansions only"});
    std::set<std::string> markups;
    for (const NlogParameter& e : o.expansions) {
      check_type(svc + "." + e.name, e.type, ontology, out);
      if (e.markup_id.empty())
        out.push_back({Severity::Error, "EmptyMarkup", svc + "." + e.name + ": markup id is empty"});
      else if (!markups.insert(e.markup_id).second)
        out.push_back({Severity::Error, "DuplicateMarkup",
                       svc + "." + o.base.name + ": markup id '" + e.markup_id + "' appears twice"});
      if (e.links.size() > 1)
        out.push_back({Severity::Info, "FanOut",
                       svc + "." + e.name + " links to " + std::to_string(e.links.size()) + " targets"});
    }
  }

  // Profile parameter lists must mirror the declared inputs/outputs.
  std::set<ParamRef> declared_inputs, declared_outputs;
  for (const Parameter& p : service.inputs) declared_inputs.insert({svc, p.name});
  for (const OutputDecl& o : service.outputs) declared_outputs.insert({svc, o.base.name});
  std::set<ParamRef> profile_inputs(service.profile.has_input.begin(), service.profile.has_input.end());
  std::set<ParamRef> profile_outputs(service.profile.has_output.begin(), service.profile.has_output.end());
  if (profile_inputs != declared_inputs)
    out.push_back({Severity::Error, "ProfileParamMismatch", svc + ": profile inputs differ from declared inputs"});
  if (profile_outputs != declared_outputs)
    out.push_back({Severity::Error, "ProfileParamMismatch", svc + ": profile outputs differ from declared outputs"});

  if (service.profile.refers_to.has_value()) {
    const ClassId& refers = *service.profile.refers_to;
    if (!ontology.has_class(refers)) {
      out.push_back({Severity::Error, "UnknownClass",
                     svc + ": profile refers to undeclared class '" + refers.iri + "'"});
    } else {
      // When the taxonomy has a data-processing root the reference must sit under it.
      for (const ClassId& id : ontology.classes()) {
        if (local_name(id.iri) == "data-processing") {
          if (!ontology.is_subclass_of(refers, id))
            out.push_back({Severity::Error, "NotDataProcessing",
                           svc + ": profile class '" + refers.iri + "' is not a data-processing class"});
          break;
        }
      }
    }
  } else {
    out.push_back({Severity::Info, "UnannotatedProfile", svc + ": profile has no data-processing reference yet"});
  }

  if (service.grounding.output_message_part.empty())
    out.push_back({Severity::Error, "MissingResultPart", svc + ": grounding has no output message part"});
  for (const Parameter& p : service.inputs) {
    int mappings = 0;
    for (const auto& [param, element] : service.grounding.input_parts) {
      if (param == p.name) ++mappings;
    }
    if (mappings == 0)
      out.push_back({Severity::Error, "MissingPartMapping",
                     svc + "." + p.name + ": no grounding message part"});
    else if (mappings > 1)
      out.push_back({Severity::Error, "DuplicatePartMapping",
                     svc + "." + p.name + ": more than one grounding message part"});
  }
  for (const auto& [param, element] : service.grounding.input_parts) {
    if (service.find_input(param) == nullptr)
      out.push_back({Severity::Error, "UnknownPartParam",
                     svc + ": grounding part for unknown input '" + param + "'"});
  }

  return out;
}

}  // namespace nlogflow
