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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlogflow/ontology.hpp"
#include "nlogflow/semodel.hpp"

namespace nlogflow {

struct Link {
  ParamRef source;
  ParamRef target;
  auto operator<=>(const Link&) const = default;
};

/// A DAG of annotated services plus workflow-level parameters, wired by
/// links. Link edges come from three places: the imported annotations, the
/// inline `links` clause of wf-input declarations, and standalone `link`
/// statements; `all_links()` is the unified, deduplicated view.
struct Workflow {
  std::string name;
  std::vector<std::pair<std::string, std::string>> imports;  // local name -> path as written
  std::vector<std::pair<std::string, ServiceAnnotation>> services;
  std::vector<Parameter> wf_inputs;
  std::vector<Parameter> wf_outputs;
  std::vector<Link> extra_links;  // standalone `link` statements
  PrefixTable prefixes;

  const ServiceAnnotation* find_service(std::string_view local) const;
  std::vector<Link> all_links() const;

  enum class EndpointKind { ServiceInput, ServiceOutput, Expansion, WfInput, WfOutput, Unknown };
  struct Endpoint {
    EndpointKind kind = EndpointKind::Unknown;
    TypeRef type;
    bool expanded_output = false;  // ServiceOutput that has expansions
  };
  Endpoint resolve(const ParamRef& ref) const;
};

/// Parses the workflow format; `read_import` maps an import path to the
/// annotation file content.
Workflow parse_workflow(const std::string& text,
                        const std::function<std::string(const std::string&)>& read_import);

/// Reads a workflow file, resolving import paths relative to its directory.
Workflow load_workflow(const std::string& path);

std::string serialize_workflow(const Workflow& workflow);

enum class LinkKind { Identical, SourceNarrower, SourceBroader, Incomparable };

const char* to_string(LinkKind kind);

/// A link is accepted when the types are identical or the source is
/// subsumed by the target. Builtin types accept only exact equality.
struct LinkVerdict {
  LinkKind kind = LinkKind::Incomparable;
  bool accepted = false;
};

LinkVerdict check_link(const Ontology& ontology, const TypeRef& source_type, const TypeRef& target_type);

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool valid = false;
};

/// Structural validity plus per-link type compatibility: every service
/// input and workflow output bound exactly once, sources and targets of the
/// permitted kinds, the service dataflow acyclic, and every link accepted.
ValidationReport validate_workflow(const Workflow& workflow, const Ontology& ontology);

/// Deterministic execution order: link sources precede targets, ties broken
/// by local-name order. Throws CycleError.
std::vector<std::string> topo_order(const Workflow& workflow);

/// The profile of the composite service embedding the whole workflow.
Profile derive_workflow_signature(const Workflow& workflow);

}  // namespace nlogflow
