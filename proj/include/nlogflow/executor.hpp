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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nlogflow/ontology.hpp"
#include "nlogflow/semodel.hpp"
#include "nlogflow/workflow.hpp"

namespace nlogflow {

/// One user-supplied value for a workflow input. `instance_class` is the
/// class of the selected instance; required when the target parameter is
/// ontology-typed.
struct ValueBinding {
  ParamRef target;
  std::string value;
  std::optional<ClassId> instance_class;
};

/// Manifest lines: `bind WF.<param> = <uri> [class <ClassId>]`.
std::vector<ValueBinding> parse_manifest(const std::string& text, const PrefixTable& prefixes);

/// Endpoint map lines: `endpoint <service> = <uri>`.
std::map<std::string, std::string> parse_endpoints(const std::string& text);

/// Instance-versus-declared-type check applied before invocation: a
/// builtin-typed target accepts any value; an ontology-typed target
/// accepts exactly the instances whose class is subsumed by it.
bool runtime_check(const Ontology& ontology, const std::optional<ClassId>& instance_class,
                   const TypeRef& declared);

/// Transport seam: HTTP in production, in-process functions in tests.
class Transport {
public:
  struct Response {
    int status = 0;
    std::string body;
  };
  virtual ~Transport() = default;
  virtual Response post(const std::string& endpoint, const std::string& body) = 0;
};

/// Plain POST of the envelope with an XML content type and empty SOAPAction.
class HttpTransport : public Transport {
public:
  explicit HttpTransport(int timeout_ms = 30000);
  Response post(const std::string& endpoint, const std::string& body) override;

private:
  int timeout_ms_;
};

/// Timeout from NLOGFLOW_TIMEOUT_MS, with a 30 s default.
int transport_timeout_ms();

struct RuntimeCheckRecord {
  std::string param;
  std::string instance_class;  // empty for untyped values
  std::string declared;
  bool accepted = false;
  bool informational = false;  // upstream-produced values re-checked for the log
};

struct ServiceRun {
  enum class Status { Succeeded, Failed, NotRun };
  std::string service;
  Status status = Status::NotRun;
  std::string endpoint;
  std::string request;
  std::string response;
  std::vector<std::pair<std::string, std::string>> extracted;  // markup -> value
  std::vector<RuntimeCheckRecord> checks;
  std::string failure_kind;
  std::string failure_message;
  long long elapsed_ms = 0;
};

struct RunReport {
  std::string workflow;
  std::vector<ServiceRun> services;  // in execution (topo) order
  std::vector<std::pair<ParamRef, std::string>> wf_outputs;
  bool succeeded = false;
  std::string failed_step;
  std::string failure_kind;
  std::string failure_message;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct ExecuteOptions {
  Transport* transport = nullptr;  // defaults to HttpTransport
  int concurrency = 1;             // >1 invokes independent services in parallel
  int timeout_ms = 0;              // 0 -> transport_timeout_ms()
};

/// Runs a validated workflow: services invoked in dependency order, inputs
/// gathered from the manifest and upstream extractions, each ontology-typed
/// input runtime-checked before any network call, results parsed by markup
/// id and routed along the links. The first failure aborts downstream
/// services (marked NotRun).
RunReport execute(const Workflow& workflow, const std::vector<ValueBinding>& manifest,
                  const std::function<std::string(const std::string&)>& endpoint_resolver,
                  const ExecuteOptions& options = {});

}  // namespace nlogflow
