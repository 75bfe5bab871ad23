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

#include "nlogflow/workflow.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "nlogflow/annotation_io.hpp"
#include "nlogflow/error.hpp"
#include "nlogflow/textutil.hpp"

namespace nlogflow {

const ServiceAnnotation* Workflow::find_service(std::string_view local) const {
  for (const auto& [name, svc] : services) {
    if (name == local) return &svc;
  }
  return nullptr;
}

std::vector<Link> Workflow::all_links() const {
  std::vector<Link> out;
  auto push = [&out](const ParamRef& source, const ParamRef& target) {
    Link link{source, target};
    if (std::find(out.begin(), out.end(), link) == out.end()) out.push_back(std::move(link));
  };
  for (const auto& [local, svc] : services) {
    for (const Parameter& p : svc.inputs)
      for (const ParamRef& t : p.links) push({local, p.name}, t);
    for (const OutputDecl& o : svc.outputs) {
      for (const ParamRef& t : o.base.links) push({local, o.base.name}, t);
      for (const NlogParameter& e : o.expansions)
        for (const ParamRef& t : e.links) push({local, e.name}, t);
    }
  }
  for (const Parameter& p : wf_inputs)
    for (const ParamRef& t : p.links) push({std::string(kWorkflowService), p.name}, t);
  for (const Parameter& p : wf_outputs)
    for (const ParamRef& t : p.links) push({std::string(kWorkflowService), p.name}, t);
  for (const Link& link : extra_links) push(link.source, link.target);
  return out;
}

Workflow::Endpoint Workflow::resolve(const ParamRef& ref) const {
  Endpoint out;
  if (ref.is_workflow()) {
    for (const Parameter& p : wf_inputs) {
      if (p.name == ref.param) return {EndpointKind::WfInput, p.type, false};
    }
    for (const Parameter& p : wf_outputs) {
      if (p.name == ref.param) return {EndpointKind::WfOutput, p.type, false};
    }
    return out;
  }
  const ServiceAnnotation* svc = find_service(ref.service);
  if (svc == nullptr) return out;
  if (const Parameter* p = svc->find_input(ref.param)) return {EndpointKind::ServiceInput, p->type, false};
  if (const OutputDecl* o = svc->find_output(ref.param))
    return {EndpointKind::ServiceOutput, o->base.type, !o->expansions.empty()};
  if (auto e = svc->find_expansion(ref.param)) return {EndpointKind::Expansion, e->expansion->type, false};
  return out;
}

Workflow parse_workflow(const std::string& text,
                        const std::function<std::string(const std::string&)>& read_import) {
  Workflow wf;
  wf.prefixes.add("xsd", std::string(kXsdNamespace));

  int line_no = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> tokens = split_statement(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "@prefix") {
      if (tokens.size() != 3 || tokens[1].back() != ':')
        throw Error(ErrorKind::ParseError, "expected '@prefix p: <uri>'", line_no);
      std::string uri = tokens[2];
      if (uri.size() >= 2 && uri.front() == '<' && uri.back() == '>') uri = uri.substr(1, uri.size() - 2);
      wf.prefixes.add(tokens[1].substr(0, tokens[1].size() - 1), uri);
    } else if (head == "workflow") {
      if (tokens.size() != 2) throw Error(ErrorKind::ParseError, "expected 'workflow <name>'", line_no);
      wf.name = tokens[1];
    } else if (head == "import") {
      if (tokens.size() != 4 || tokens[2] != "from")
        throw Error(ErrorKind::ParseError, "expected 'import <local> from <path>'", line_no);
      const std::string& local = tokens[1];
      if (wf.find_service(local) != nullptr)
        throw Error(ErrorKind::DuplicateService, "service '" + local + "' imported twice", line_no);
      AnnotationFile file = parse_annotation(read_import(tokens[3]));
      // The workflow-local name wins over the name in the annotation file.
      std::string original = file.service.name;
      file.service.name = local;
      if (file.service.profile.name == original + "_profile") file.service.profile.name = local + "_profile";
      for (ParamRef& r : file.service.profile.has_input) r.service = local;
      for (ParamRef& r : file.service.profile.has_output) r.service = local;
      for (const auto& [prefix, uri] : file.prefixes.entries()) {
        if (wf.prefixes.find(prefix) == nullptr) wf.prefixes.add(prefix, uri);
      }
      wf.imports.emplace_back(local, tokens[3]);
      wf.services.emplace_back(local, std::move(file.service));
    } else if (head == "wf-input" || head == "wf-output") {
      if (tokens.size() < 4 || tokens[2] != "type")
        throw Error(ErrorKind::ParseError, "expected '" + head + " <name> type <type> [links ...]'", line_no);
      Parameter p;
      p.name = tokens[1];
      p.direction = head == "wf-input" ? Direction::Input : Direction::Output;
      p.type = TypeRef::parse(tokens[3], wf.prefixes);
      if (tokens.size() > 4) {
        if (tokens[4] != "links")
          throw Error(ErrorKind::ParseError, "unexpected '" + tokens[4] + "'", line_no);
        if (head == "wf-output")
          throw Error(ErrorKind::ParseError, "workflow outputs are link targets, not sources", line_no);
        for (size_t i = 5; i < tokens.size(); ++i) p.links.push_back(ParamRef::parse(tokens[i]));
        if (p.links.empty()) throw Error(ErrorKind::ParseError, "'links' needs at least one target", line_no);
      }
      (head == "wf-input" ? wf.wf_inputs : wf.wf_outputs).push_back(std::move(p));
    } else if (head == "link") {
      if (tokens.size() != 4 || tokens[2] != "->")
        throw Error(ErrorKind::ParseError, "expected 'link <source> -> <target>'", line_no);
      wf.extra_links.push_back({ParamRef::parse(tokens[1]), ParamRef::parse(tokens[3])});
    } else {
      throw Error(ErrorKind::ParseError, "unknown statement '" + head + "'", line_no);
    }
  }
  if (wf.name.empty()) throw Error(ErrorKind::ParseError, "missing 'workflow' statement");
  return wf;
}

Workflow load_workflow(const std::string& path) {
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  return parse_workflow(read_file(path), [&base](const std::string& import_path) {
    std::filesystem::path resolved(import_path);
    if (resolved.is_relative()) resolved = base / resolved;
    return read_file(resolved.string());
  });
}

std::string serialize_workflow(const Workflow& wf) {
  std::ostringstream out;
  for (const auto& [prefix, uri] : wf.prefixes.entries()) {
    if (prefix == "xsd" && uri == kXsdNamespace) continue;
    out << "@prefix " << prefix << ": <" << uri << ">\n";
  }
  out << "\nworkflow " << wf.name << "\n";
  if (!wf.imports.empty()) out << "\n";
  for (const auto& [local, path] : wf.imports) out << "import " << local << " from " << path << "\n";
  if (!wf.wf_inputs.empty() || !wf.wf_outputs.empty()) out << "\n";
  for (const Parameter& p : wf.wf_inputs) {
    out << "wf-input " << p.name << " type " << p.type.to_text(wf.prefixes);
    if (!p.links.empty()) {
      out << " links";
      for (const ParamRef& r : p.links) out << " " << r.to_text();
    }
    out << "\n";
  }
  for (const Parameter& p : wf.wf_outputs)
    out << "wf-output " << p.name << " type " << p.type.to_text(wf.prefixes) << "\n";
  if (!wf.extra_links.empty()) out << "\n";
  for (const Link& link : wf.extra_links)
    out << "link " << link.source.to_text() << " -> " << link.target.to_text() << "\n";
  return out.str();
}

const char* to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::Identical: return "Identical";
    case LinkKind::SourceNarrower: return "SourceNarrower";
    case LinkKind::SourceBroader: return "SourceBroader";
    case LinkKind::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

LinkVerdict check_link(const Ontology& ontology, const TypeRef& source_type, const TypeRef& target_type) {
  if (source_type == target_type) return {LinkKind::Identical, true};
  if (source_type.is_builtin() || target_type.is_builtin()) return {LinkKind::Incomparable, false};
  const ClassId& source = source_type.class_id();
  const ClassId& target = target_type.class_id();
  if (!ontology.has_class(source))
    throw Error(ErrorKind::UnknownType, "type '" + source.iri + "' is not declared");
  if (!ontology.has_class(target))
    throw Error(ErrorKind::UnknownType, "type '" + target.iri + "' is not declared");
  if (ontology.is_subclass_of(source, target)) return {LinkKind::SourceNarrower, true};
  if (ontology.is_subclass_of(target, source)) return {LinkKind::SourceBroader, false};
  return {LinkKind::Incomparable, false};
}

namespace {

// Service-level dataflow edges induced by the links.
std::vector<std::pair<std::string, std::string>> service_edges(const Workflow& wf,
                                                               const std::vector<Link>& links) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Link& link : links) {
    if (link.source.is_workflow() || link.target.is_workflow()) continue;
    if (link.source.service == link.target.service) continue;
    std::pair<std::string, std::string> edge{link.source.service, link.target.service};
    if (wf.find_service(edge.first) == nullptr || wf.find_service(edge.second) == nullptr) continue;
    if (std::find(edges.begin(), edges.end(), edge) == edges.end()) edges.push_back(std::move(edge));
  }
  return edges;
}

}  // namespace

ValidationReport validate_workflow(const Workflow& wf, const Ontology& ontology) {
  ValidationReport report;
  std::vector<Diagnostic>& out = report.diagnostics;

  for (const auto& [local, svc] : wf.services) {
    std::vector<Diagnostic> svc_diags = validate_annotation(svc, ontology);
    out.insert(out.end(), svc_diags.begin(), svc_diags.end());
  }

  std::vector<Link> links = wf.all_links();
  std::map<ParamRef, int> incoming;

  for (const Link& link : links) {
    std::string where = link.source.to_text() + " -> " + link.target.to_text();
    Workflow::Endpoint source = wf.resolve(link.source);
    Workflow::Endpoint target = wf.resolve(link.target);

    if (source.kind == Workflow::EndpointKind::Unknown) {
      out.push_back({Severity::Error, "UnknownLinkEndpoint", where + ": source does not exist"});
      continue;
    }
    if (target.kind == Workflow::EndpointKind::Unknown) {
      out.push_back({Severity::Error, "UnknownLinkEndpoint", where + ": target does not exist"});
      continue;
    }

    bool source_ok = source.kind == Workflow::EndpointKind::Expansion ||
                     source.kind == Workflow::EndpointKind::WfInput ||
                     (source.kind == Workflow::EndpointKind::ServiceOutput && !source.expanded_output);
    if (!source_ok) {
      const char* why = source.kind == Workflow::EndpointKind::ServiceOutput
                            ? ": an expanded output routes values through its expansions"
                            : ": only expansions, unexpanded outputs, and workflow inputs can be sources";
      out.push_back({Severity::Error, "BadLinkSource", where + why});
      continue;
    }
    bool target_ok = target.kind == Workflow::EndpointKind::ServiceInput ||
                     target.kind == Workflow::EndpointKind::WfOutput;
    if (!target_ok) {
      out.push_back({Severity::Error, "BadLinkTarget",
                     where + ": only service inputs and workflow outputs can be targets"});
      continue;
    }
    ++incoming[link.target];

    try {
      LinkVerdict verdict = check_link(ontology, source.type, target.type);
      if (!verdict.accepted)
        out.push_back({Severity::Error, to_string(verdict.kind),
                       where + ": source type " + source.type.to_text(wf.prefixes) +
                           " is not accepted by target type " + target.type.to_text(wf.prefixes)});
    } catch (const Error& e) {
      out.push_back({Severity::Error, to_string(e.kind()), where + ": " + e.what()});
    }
  }

  for (const auto& [local, svc] : wf.services) {
    for (const Parameter& p : svc.inputs) {
      int n = incoming.count({local, p.name}) != 0 ? incoming.at({local, p.name}) : 0;
      if (n == 0)
        out.push_back({Severity::Error, "UnboundInput",
                       local + "." + p.name + ": service input is not the target of any link"});
      else if (n > 1)
        out.push_back({Severity::Error, "MultiplyBoundInput",
                       local + "." + p.name + ": service input is bound " + std::to_string(n) + " times"});
    }
    for (const OutputDecl& o : svc.outputs) {
      for (const NlogParameter& e : o.expansions) {
        bool linked = std::any_of(links.begin(), links.end(), [&](const Link& l) {
          return l.source == ParamRef{local, e.name};
        });
        if (!linked)
          out.push_back({Severity::Info, "UnlinkedExpansion",
                         local + "." + e.name + ": expansion value is not routed anywhere"});
      }
    }
  }
  for (const Parameter& p : wf.wf_outputs) {
    ParamRef ref{std::string(kWorkflowService), p.name};
    int n = incoming.count(ref) != 0 ? incoming.at(ref) : 0;
    if (n == 0)
      out.push_back({Severity::Error, "UnboundWorkflowOutput",
                     ref.to_text() + ": workflow output is not the target of any link"});
    else if (n > 1)
      out.push_back({Severity::Error, "MultiplyBoundWorkflowOutput",
                     ref.to_text() + ": workflow output is bound " + std::to_string(n) + " times"});
  }
  for (const Parameter& p : wf.wf_inputs) {
    if (p.links.empty())
      out.push_back({Severity::Info, "UnusedWorkflowInput",
                     std::string(kWorkflowService) + "." + p.name + ": workflow input feeds nothing"});
  }

  try {
    topo_order(wf);
  } catch (const Error& e) {
    out.push_back({Severity::Error, "DataflowCycle", e.what()});
  }

  report.valid = !has_errors(out);
  return report;
}

std::vector<std::string> topo_order(const Workflow& wf) {
  std::vector<std::pair<std::string, std::string>> edges = service_edges(wf, wf.all_links());
  std::map<std::string, int> in_degree;
  for (const auto& [local, svc] : wf.services) in_degree[local] = 0;
  for (const auto& [from, to] : edges) ++in_degree[to];

  std::set<std::string> ready;
  for (const auto& [name, degree] : in_degree)
    if (degree == 0) ready.insert(name);

  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string next = *ready.begin();  // lexicographic tie-break
    ready.erase(ready.begin());
    order.push_back(next);
    for (const auto& [from, to] : edges) {
      if (from == next && --in_degree[to] == 0) ready.insert(to);
    }
  }
  if (order.size() != wf.services.size()) {
    std::string stuck;
    for (const auto& [name, degree] : in_degree)
      if (degree > 0) stuck += (stuck.empty() ? "" : ", ") + name;
    throw Error(ErrorKind::CycleError, "service dataflow contains a cycle through: " + stuck);
  }
  return order;
}

Profile derive_workflow_signature(const Workflow& wf) {
  Profile profile;
  profile.name = wf.name;
  for (const Parameter& p : wf.wf_inputs)
    profile.has_input.push_back({std::string(kWorkflowService), p.name});
  for (const Parameter& p : wf.wf_outputs)
    profile.has_output.push_back({std::string(kWorkflowService), p.name});
  return profile;
}

}  // namespace nlogflow
