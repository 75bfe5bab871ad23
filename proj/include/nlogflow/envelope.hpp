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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlogflow/semodel.hpp"

namespace nlogflow {

inline constexpr std::string_view kSoapEnvelopeNs = "http://schemas.xmlsoap.org/soap/envelope/";

/// Request document: one operation element in the service namespace with
/// one child per input, in grounding (schema sequence) order.
struct RequestEnvelope {
  std::string operation;
  std::string service_namespace;
  std::vector<std::pair<std::string, std::string>> entries;  // element -> value
};

/// Result document: the composite result box (conventionally
/// "<operation>Result") wrapping one element per embedded output value.
struct ResultEnvelope {
  std::string result_element;
  std::string service_namespace;
  std::vector<std::pair<std::string, std::string>> entries;  // markup -> value
};

/// Renderers are byte-deterministic; the emitted documents are the wire
/// format golden files are recorded against.
std::string render_request(const RequestEnvelope& request);
std::string render_result(const ResultEnvelope& result);
std::string render_fault(std::string_view service_namespace, std::string_view message);

/// Fills a request from the annotation's grounding: every input must have a
/// value (MissingValue otherwise); children follow grounding part order.
RequestEnvelope build_request(const ServiceAnnotation& service,
                              const std::map<std::string, std::string>& values);

struct ParsedResult {
  std::string result_text;                                   // text of the result box itself
  std::vector<std::pair<std::string, std::string>> entries;  // child element -> value, document order
};

/// Locates the result box by local name (prefixes tolerated) in a response
/// document, with or without the soap wrapper. Throws FaultReceived when a
/// fault element is found instead, MalformedXml when neither exists.
ParsedResult parse_result_document(const std::string& text, std::string_view result_element);

/// Markup-id extraction for one service: one entry per expansion whose
/// markup is present; absence of a linked expansion is MissingMarkup.
std::map<std::string, std::string> parse_result(const ServiceAnnotation& service, const std::string& text);

}  // namespace nlogflow
