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

#include "nlogflow/error.hpp"

#include <algorithm>

namespace nlogflow {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::XmlError: return "XmlError";
    case ErrorKind::MalformedXml: return "MalformedXml";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::DanglingRef: return "DanglingRef";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::MissingOperation: return "MissingOperation";
    case ErrorKind::AmbiguousOperation: return "AmbiguousOperation";
    case ErrorKind::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorKind::RecursionError: return "RecursionError";
    case ErrorKind::DuplicateLeafName: return "DuplicateLeafName";
    case ErrorKind::DuplicateService: return "DuplicateService";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::MissingMarkup: return "MissingMarkup";
    case ErrorKind::FaultReceived: return "FaultReceived";
    case ErrorKind::TransportError: return "TransportError";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::BindError: return "BindError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message, int line) {
  std::string out = to_string(kind);
  out += ": ";
  out += message;
  if (line > 0) {
    out += " (line ";
    out += std::to_string(line);
    out += ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(format_message(kind, message, 0)), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, int line)
    : std::runtime_error(format_message(kind, message, line)), kind_(kind), line_(line) {}

const char* to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "error";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace nlogflow
