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

#include <stdexcept>
#include <string>
#include <vector>

namespace nlogflow {

enum class ErrorKind {
  ParseError,
  XmlError,
  MalformedXml,
  CycleError,
  DanglingRef,
  UnknownClass,
  UnknownProperty,
  UnknownType,
  UnknownParameter,
  MissingOperation,
  AmbiguousOperation,
  UnsupportedConstruct,
  RecursionError,
  DuplicateLeafName,
  DuplicateService,
  MissingValue,
  MissingMarkup,
  FaultReceived,
  TransportError,
  CheckFailed,
  BindError,
  IoError,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a stable error kind; `line` is 0 when not applicable.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, int line);

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  ErrorKind kind_;
  int line_ = 0;
};

enum class Severity { Info, Warning, Error };

const char* to_string(Severity severity);

/// One validation finding. `code` is a stable machine-readable identifier
/// such as "UnboundInput" or "SourceBroader".
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace nlogflow
