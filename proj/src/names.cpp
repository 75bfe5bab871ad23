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

#include "nlogflow/names.hpp"

#include "nlogflow/error.hpp"

namespace nlogflow {

void PrefixTable::add(const std::string& prefix, const std::string& uri) {
  for (auto& entry : entries_) {
    if (entry.first == prefix) {
      entry.second = uri;
      return;
    }
  }
  entries_.emplace_back(prefix, uri);
}

const std::string* PrefixTable::find(std::string_view prefix) const {
  for (const auto& entry : entries_) {
    if (entry.first == prefix) return &entry.second;
  }
  return nullptr;
}

std::string PrefixTable::expand(const std::string& token) const {
  if (token.empty()) throw Error(ErrorKind::ParseError, "empty name");
  if (token.front() == '<' && token.back() == '>') return token.substr(1, token.size() - 2);
  if (token.find("://") != std::string::npos) return token;
  auto colon = token.find(':');
  if (colon == std::string::npos || colon == 0) return token;
  std::string prefix = token.substr(0, colon);
  const std::string* ns = find(prefix);
  if (ns == nullptr) throw Error(ErrorKind::ParseError, "unknown prefix '" + prefix + ":' in '" + token + "'");
  return *ns + token.substr(colon + 1);
}

std::string PrefixTable::compress(const std::string& iri) const {
  const std::pair<std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    if (iri.size() > entry.second.size() && iri.compare(0, entry.second.size(), entry.second) == 0) {
      std::string rest = iri.substr(entry.second.size());
      if (rest.find('/') != std::string::npos || rest.find('#') != std::string::npos) continue;
      if (best == nullptr || entry.second.size() > best->second.size()) best = &entry;
    }
  }
  if (best != nullptr) return best->first + ":" + iri.substr(best->second.size());
  if (iri.find("://") != std::string::npos) return "<" + iri + ">";
  return iri;
}

std::string local_name(std::string_view iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos) return std::string(iri);
  return std::string(iri.substr(pos + 1));
}

}  // namespace nlogflow
