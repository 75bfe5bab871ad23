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

#include "nlogflow/annotation_io.hpp"

#include <sstream>

#include "nlogflow/error.hpp"
#include "nlogflow/textutil.hpp"

namespace nlogflow {

namespace {

enum class Section { Top, Profile, Inputs, Outputs, OutputBlock, ExpandsBlock, Grounding };

std::vector<ParamRef> parse_links(const std::vector<std::string>& tokens, size_t from, int line) {
  std::vector<ParamRef> out;
  if (tokens.size() <= from)
    throw Error(ErrorKind::ParseError, "'links' needs at least one target", line);
  for (size_t i = from; i < tokens.size(); ++i) out.push_back(ParamRef::parse(tokens[i]));
  return out;
}

}  // namespace

AnnotationFile parse_annotation(const std::string& text) {
  AnnotationFile file;
  file.prefixes.add("xsd", std::string(kXsdNamespace));
  ServiceAnnotation& svc = file.service;

  Section section = Section::Top;
  OutputDecl* output = nullptr;
  NlogParameter* expansion = nullptr;
  bool have_service = false;
  bool profile_named = false;

  int line_no = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> tokens = split_statement(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    switch (section) {
      case Section::Top:
        if (head == "@prefix") {
          if (tokens.size() != 3 || tokens[1].back() != ':')
            throw Error(ErrorKind::ParseError, "expected '@prefix p: <uri>'", line_no);
          std::string uri = tokens[2];
          if (uri.size() >= 2 && uri.front() == '<' && uri.back() == '>') uri = uri.substr(1, uri.size() - 2);
          file.prefixes.add(tokens[1].substr(0, tokens[1].size() - 1), uri);
        } else if (head == "service") {
          if (tokens.size() != 2) throw Error(ErrorKind::ParseError, "expected 'service <name>'", line_no);
          if (have_service) throw Error(ErrorKind::ParseError, "second 'service' statement", line_no);
          svc.name = tokens[1];
          have_service = true;
        } else if (head == "profile") {
          section = Section::Profile;
        } else if (head == "inputs") {
          section = Section::Inputs;
        } else if (head == "outputs") {
          section = Section::Outputs;
        } else if (head == "grounding") {
          section = Section::Grounding;
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "'", line_no);
        }
        break;

      case Section::Profile:
        if (head == "end") {
          section = Section::Top;
        } else if (head == "name") {
          if (tokens.size() != 2) throw Error(ErrorKind::ParseError, "expected 'name <profile-name>'", line_no);
          svc.profile.name = tokens[1];
          profile_named = true;
        } else if (head == "refers-to") {
          if (tokens.size() != 2) throw Error(ErrorKind::ParseError, "expected 'refers-to <class>'", line_no);
          svc.profile.refers_to = ClassId{file.prefixes.expand(tokens[1])};
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "' in profile", line_no);
        }
        break;

      case Section::Inputs:
        if (head == "end") {
          section = Section::Top;
        } else if (head == "param") {
          if (tokens.size() != 4 || tokens[2] != "type")
            throw Error(ErrorKind::ParseError, "expected 'param <name> type <type>'", line_no);
          Parameter p;
          p.name = tokens[1];
          p.direction = Direction::Input;
          p.type = TypeRef::parse(tokens[3], file.prefixes);
          svc.inputs.push_back(std::move(p));
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "' in inputs", line_no);
        }
        break;

      case Section::Outputs:
        if (head == "end") {
          section = Section::Top;
        } else if (head == "output") {
          if (tokens.size() != 2 && (tokens.size() != 4 || tokens[2] != "type"))
            throw Error(ErrorKind::ParseError, "expected 'output <name> [type <type>]'", line_no);
          OutputDecl decl;
          decl.base.name = tokens[1];
          decl.base.direction = Direction::Output;
          if (tokens.size() == 4) decl.base.type = TypeRef::parse(tokens[3], file.prefixes);
          svc.outputs.push_back(std::move(decl));
          output = &svc.outputs.back();
          section = Section::OutputBlock;
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "' in outputs", line_no);
        }
        break;

      case Section::OutputBlock:
        if (head == "end") {
          output = nullptr;
          section = Section::Outputs;
        } else if (head == "links") {
          output->base.links = parse_links(tokens, 1, line_no);
        } else if (head == "expands") {
          NlogParameter e;
          size_t i = 1;
          if (tokens.size() < 2) throw Error(ErrorKind::ParseError, "expected 'expands <name> ...'", line_no);
          e.name = tokens[i++];
          e.markup_id = e.name;
          while (i < tokens.size()) {
            if (tokens[i] == "id" && i + 1 < tokens.size()) {
              e.markup_id = tokens[i + 1];
              i += 2;
            } else if (tokens[i] == "type" && i + 1 < tokens.size()) {
              e.type = TypeRef::parse(tokens[i + 1], file.prefixes);
              i += 2;
            } else {
              throw Error(ErrorKind::ParseError, "unexpected '" + tokens[i] + "' in expands header", line_no);
            }
          }
          output->expansions.push_back(std::move(e));
          expansion = &output->expansions.back();
          section = Section::ExpandsBlock;
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "' in output block", line_no);
        }
        break;

      case Section::ExpandsBlock:
        if (head == "end") {
          expansion = nullptr;
          section = Section::OutputBlock;
        } else if (head == "label") {
          expansion->label = rest_after_tokens(line, 1);
        } else if (head == "links") {
          expansion->links = parse_links(tokens, 1, line_no);
        } else {
          throw Error(ErrorKind::ParseError, "unexpected '" + head + "' in expands block", line_no);
        }
        break;

      case Section::Grounding:
        if (head == "end") {
          section = Section::Top;
        } else if (head == "wsdl" && tokens.size() == 2) {
          svc.grounding.wsdl_uri = tokens[1];
        } else if (head == "namespace" && tokens.size() == 2) {
          svc.grounding.service_namespace = tokens[1];
        } else if (head == "operation" && tokens.size() == 2) {
          svc.grounding.operation = tokens[1];
        } else if (head == "port-type" && tokens.size() == 2) {
          svc.grounding.port_type = tokens[1];
        } else if (head == "part" && tokens.size() == 4 && tokens[2] == "=") {
          svc.grounding.input_parts.emplace_back(tokens[1], tokens[3]);
        } else if (head == "result-part" && tokens.size() == 2) {
          svc.grounding.output_message_part = tokens[1];
        } else {
          throw Error(ErrorKind::ParseError, "unexpected grounding statement '" + head + "'", line_no);
        }
        break;
    }
  }
  if (section != Section::Top) throw Error(ErrorKind::ParseError, "unterminated section (missing 'end')");
  if (!have_service) throw Error(ErrorKind::ParseError, "missing 'service' statement");

  if (!profile_named) svc.profile.name = svc.name + "_profile";
  for (const Parameter& p : svc.inputs) svc.profile.has_input.push_back({svc.name, p.name});
  for (const OutputDecl& o : svc.outputs) svc.profile.has_output.push_back({svc.name, o.base.name});
  return file;
}

std::string serialize_annotation(const AnnotationFile& file) {
  const ServiceAnnotation& svc = file.service;
  const PrefixTable& prefixes = file.prefixes;
  std::ostringstream out;

  for (const auto& [prefix, uri] : prefixes.entries()) {
    if (prefix == "xsd" && uri == kXsdNamespace) continue;
    out << "@prefix " << prefix << ": <" << uri << ">\n";
  }
  out << "\nservice " << svc.name << "\n";

  out << "\nprofile\n";
  if (svc.profile.name != svc.name + "_profile") out << "  name " << svc.profile.name << "\n";
  if (svc.profile.refers_to.has_value())
    out << "  refers-to " << prefixes.compress(svc.profile.refers_to->iri) << "\n";
  out << "end\n";

  out << "\ninputs\n";
  for (const Parameter& p : svc.inputs)
    out << "  param " << p.name << " type " << p.type.to_text(prefixes) << "\n";
  out << "end\n";

  out << "\noutputs\n";
  for (const OutputDecl& o : svc.outputs) {
    out << "  output " << o.base.name << " type " << o.base.type.to_text(prefixes) << "\n";
    if (!o.base.links.empty()) {
      out << "    links";
      for (const ParamRef& ref : o.base.links) out << " " << ref.to_text();
      out << "\n";
    }
    for (const NlogParameter& e : o.expansions) {
      out << "    expands " << e.name;
      if (e.markup_id != e.name) out << " id " << e.markup_id;
      out << " type " << e.type.to_text(prefixes) << "\n";
      if (!e.label.empty()) out << "      label " << e.label << "\n";
      if (!e.links.empty()) {
        out << "      links";
        for (const ParamRef& ref : e.links) out << " " << ref.to_text();
        out << "\n";
      }
      out << "    end\n";
    }
    out << "  end\n";
  }
  out << "end\n";

  const Grounding& g = svc.grounding;
  out << "\ngrounding\n";
  if (!g.wsdl_uri.empty()) out << "  wsdl " << g.wsdl_uri << "\n";
  if (!g.service_namespace.empty()) out << "  namespace " << g.service_namespace << "\n";
  if (!g.operation.empty()) out << "  operation " << g.operation << "\n";
  if (!g.port_type.empty()) out << "  port-type " << g.port_type << "\n";
  for (const auto& [param, element] : g.input_parts) out << "  part " << param << " = " << element << "\n";
  if (!g.output_message_part.empty()) out << "  result-part " << g.output_message_part << "\n";
  out << "end\n";

  return out.str();
}

}  // namespace nlogflow
