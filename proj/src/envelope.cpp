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

#include "nlogflow/envelope.hpp"

#include <sstream>

#include "nlogflow/error.hpp"
#include "nlogflow/xml.hpp"

namespace nlogflow {

std::string render_request(const RequestEnvelope& request) {
  std::ostringstream out;
  out << "<soapenv:Envelope xmlns:soapenv=\"" << kSoapEnvelopeNs
      << "\" xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
      << " xmlns:xsd=\"http://www.w3.org/2001/XMLSchema\">\n";
  out << "  <soapenv:Body>\n";
  out << "    <" << request.operation << " xmlns=\"" << xml::escape(request.service_namespace) << "\">";
  if (request.entries.empty()) {
    out << "</" << request.operation << ">\n";
  } else {
    out << "\n";
    for (const auto& [element, value] : request.entries)
      out << "      <" << element << " xsi:type=\"xsd:string\">" << xml::escape(value) << "</" << element
          << ">\n";
    out << "    </" << request.operation << ">\n";
  }
  out << "  </soapenv:Body>\n";
  out << "</soapenv:Envelope>\n";
  return out.str();
}

std::string render_result(const ResultEnvelope& result) {
  std::ostringstream out;
  out << "<soapenv:Envelope xmlns:soapenv=\"" << kSoapEnvelopeNs << "\">\n";
  out << "  <soapenv:Body>\n";
  out << "    <ns1:" << result.result_element << " xmlns:ns1=\"" << xml::escape(result.service_namespace)
      << "\">";
  if (result.entries.empty()) {
    out << "</ns1:" << result.result_element << ">\n";
  } else {
    out << "\n";
    for (const auto& [markup, value] : result.entries)
      out << "      <" << markup << ">" << xml::escape(value) << "</" << markup << ">\n";
    out << "    </ns1:" << result.result_element << ">\n";
  }
  out << "  </soapenv:Body>\n";
  out << "</soapenv:Envelope>\n";
  return out.str();
}

std::string render_fault(std::string_view service_namespace, std::string_view message) {
  std::ostringstream out;
  out << "<soapenv:Envelope xmlns:soapenv=\"" << kSoapEnvelopeNs << "\">\n";
  out << "  <soapenv:Body>\n";
  out << "    <SOAPException xmlns=\"" << xml::escape(service_namespace) << "\">" << xml::escape(message)
      << "</SOAPException>\n";
  out << "  </soapenv:Body>\n";
  out << "</soapenv:Envelope>\n";
  return out.str();
}

RequestEnvelope build_request(const ServiceAnnotation& service,
                              const std::map<std::string, std::string>& values) {
  RequestEnvelope request;
  request.operation = service.grounding.operation;
  request.service_namespace = service.grounding.service_namespace;
  for (const auto& [param, element] : service.grounding.input_parts) {
    auto it = values.find(param);
    if (it == values.end())
      throw Error(ErrorKind::MissingValue, "no value for input '" + service.name + "." + param + "'");
    request.entries.emplace_back(element, it->second);
  }
  return request;
}

ParsedResult parse_result_document(const std::string& text, std::string_view result_element) {
  xml::Element root;
  try {
    root = xml::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedXml, std::string("response is not well-formed: ") + e.what());
  }

  if (const xml::Element* fault = root.find_descendant("SOAPException"))
    throw Error(ErrorKind::FaultReceived, fault->text.empty() ? "service returned a fault" : fault->text);
  if (const xml::Element* fault = root.find_descendant("Fault")) {
    std::string detail = fault->text;
    if (const xml::Element* reason = fault->find_descendant("faultstring")) detail = reason->text;
    throw Error(ErrorKind::FaultReceived, detail.empty() ? "service returned a fault" : detail);
  }

  const xml::Element* box = root.find_descendant(result_element);
  if (box == nullptr)
    throw Error(ErrorKind::MalformedXml,
                "response contains no '" + std::string(result_element) + "' element");

  ParsedResult parsed;
  parsed.result_text = box->text;
  for (const xml::Element& child : box->children)
    parsed.entries.emplace_back(child.local_name(), child.text);
  return parsed;
}

std::map<std::string, std::string> parse_result(const ServiceAnnotation& service, const std::string& text) {
  ParsedResult parsed = parse_result_document(text, service.grounding.output_message_part);

  std::map<std::string, std::string> by_markup;
  for (const auto& [markup, value] : parsed.entries) by_markup.emplace(markup, value);

  std::map<std::string, std::string> out;
  for (const OutputDecl& o : service.outputs) {
    for (const NlogParameter& e : o.expansions) {
      auto it = by_markup.find(e.markup_id);
      if (it != by_markup.end()) {
        out[e.markup_id] = it->second;
      } else if (!e.links.empty()) {
        throw Error(ErrorKind::MissingMarkup,
                    "result of '" + service.name + "' is missing linked markup '" + e.markup_id + "'");
      }
    }
  }
  return out;
}

}  // namespace nlogflow
