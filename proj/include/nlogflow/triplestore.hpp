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

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nlogflow/names.hpp"
#include "nlogflow/semodel.hpp"

namespace nlogflow {

// Namespaces used for the annotation triples.
inline constexpr std::string_view kKbNamespace = "http://example.org/nlogflow/kb#";
inline constexpr std::string_view kProcessNamespace = "http://example.org/nlogflow/process#";
inline constexpr std::string_view kProfileNamespace = "http://example.org/nlogflow/profile#";
inline constexpr std::string_view kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

enum class TermKind { Iri, Literal, Variable };

struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;

  auto operator<=>(const Term&) const = default;

  static Term iri(std::string v) { return {TermKind::Iri, std::move(v)}; }
  static Term literal(std::string v) { return {TermKind::Literal, std::move(v)}; }
  static Term variable(std::string v) { return {TermKind::Variable, std::move(v)}; }
};

struct Triple {
  Term subject, predicate, object;
  auto operator<=>(const Triple&) const = default;
};

/// Like Triple but any position may hold a variable.
struct TriplePattern {
  Term subject, predicate, object;
};

using Binding = std::map<std::string, Term>;

/// Set of ground triples with conjunctive pattern queries. Immutable for
/// readers once built.
class TripleStore {
public:
  void insert(Triple triple);  // duplicates ignored
  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }

  /// All and only the substitutions making every pattern a store triple.
  /// Zero patterns yield exactly one empty binding. Results are sorted by
  /// the tuple of bound terms in first-appearance order of the variables.
  std::vector<Binding> query(const std::vector<TriplePattern>& patterns) const;

  PrefixTable& prefixes() { return prefixes_; }
  const PrefixTable& prefixes() const { return prefixes_; }

  std::string serialize() const;
  static TripleStore parse(const std::string& text);

private:
  std::vector<Triple> triples_;
  PrefixTable prefixes_;
};

/// Triple projection of a set of service annotations: expansion, markup,
/// label, type, link, and profile reference triples per service.
/// Throws DuplicateService when two annotations share a name.
TripleStore build_store(const std::vector<ServiceAnnotation>& services);

/// Identifier a parameter gets in the store: kb:<service>_<param>.
std::string param_iri(const ParamRef& ref);

/// Parses a whitespace-separated pattern conjunction, patterns split by a
/// lone '.'. Terms: ?var, <iri>, prefix:name, "literal", or a bare token
/// resolved against the store (unique local-name match, else a literal).
std::vector<TriplePattern> parse_patterns(const std::string& text, const TripleStore& store);

}  // namespace nlogflow
