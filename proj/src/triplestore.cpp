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

#include "nlogflow/triplestore.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nlogflow/error.hpp"
#include "nlogflow/textutil.hpp"

namespace nlogflow {

namespace {

std::string ns(std::string_view base, std::string_view local) {
  return std::string(base) + std::string(local);
}

bool match_term(const Term& pattern, const Term& value, Binding& binding) {
  if (pattern.kind == TermKind::Variable) {
    auto it = binding.find(pattern.value);
    if (it == binding.end()) {
      binding.emplace(pattern.value, value);
      return true;
    }
    return it->second == value;
  }
  return pattern.kind == value.kind && pattern.value == value.value;
}

void collect_variables(const TriplePattern& pattern, std::vector<std::string>& order) {
  for (const Term* term : {&pattern.subject, &pattern.predicate, &pattern.object}) {
    if (term->kind == TermKind::Variable &&
        std::find(order.begin(), order.end(), term->value) == order.end())
      order.push_back(term->value);
  }
}

}  // namespace

void TripleStore::insert(Triple triple) {
  if (std::find(triples_.begin(), triples_.end(), triple) == triples_.end())
    triples_.push_back(std::move(triple));
}

std::vector<Binding> TripleStore::query(const std::vector<TriplePattern>& patterns) const {
  std::vector<Binding> current{Binding{}};
  for (const TriplePattern& pattern : patterns) {
    std::set<Binding> next;
    for (const Binding& binding : current) {
      for (const Triple& triple : triples_) {
        Binding extended = binding;
        if (match_term(pattern.subject, triple.subject, extended) &&
            match_term(pattern.predicate, triple.predicate, extended) &&
            match_term(pattern.object, triple.object, extended))
          next.insert(std::move(extended));
      }
    }
    current.assign(next.begin(), next.end());
    if (current.empty()) return current;
  }

  std::vector<std::string> order;
  for (const TriplePattern& pattern : patterns) collect_variables(pattern, order);
  std::sort(current.begin(), current.end(), [&order](const Binding& a, const Binding& b) {
    for (const std::string& var : order) {
      const Term& ta = a.at(var);
      const Term& tb = b.at(var);
      if (ta != tb) return ta < tb;
    }
    return false;
  });
  return current;
}

std::string TripleStore::serialize() const {
  std::ostringstream out;
  for (const auto& [prefix, uri] : prefixes_.entries()) out << "@prefix " << prefix << ": <" << uri << ">\n";
  if (!prefixes_.empty()) out << "\n";
  std::vector<Triple> sorted = triples_;
  std::sort(sorted.begin(), sorted.end());
  for (const Triple& t : sorted) {
    auto render = [&](const Term& term) -> std::string {
      if (term.kind == TermKind::Literal) return "\"" + term.value + "\"";
      return prefixes_.compress(term.value);
    };
    out << render(t.subject) << " " << render(t.predicate) << " " << render(t.object) << " .\n";
  }
  return out.str();
}

TripleStore TripleStore::parse(const std::string& text) {
  TripleStore store;
  int line_no = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> tokens = split_statement(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "@prefix") {
      if (tokens.size() != 3 || tokens[1].back() != ':')
        throw Error(ErrorKind::ParseError, "expected '@prefix p: <uri>'", line_no);
      std::string uri = tokens[2];
      if (uri.size() >= 2 && uri.front() == '<' && uri.back() == '>') uri = uri.substr(1, uri.size() - 2);
      store.prefixes_.add(tokens[1].substr(0, tokens[1].size() - 1), uri);
      continue;
    }
    if (tokens.size() != 4 || tokens[3] != ".")
      throw Error(ErrorKind::ParseError, "expected '<s> <p> <o> .'", line_no);
    Triple triple;
    Term* slots[3] = {&triple.subject, &triple.predicate, &triple.object};
    for (int i = 0; i < 3; ++i) {
      const std::string& token = tokens[i];
      if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
        *slots[i] = Term::literal(token.substr(1, token.size() - 2));
      else
        *slots[i] = Term::iri(store.prefixes_.expand(token));
    }
    store.insert(std::move(triple));
  }
  return store;
}

std::string param_iri(const ParamRef& ref) {
  return ns(kKbNamespace, ref.service + "_" + ref.param);
}

namespace {

void add_parameter_triples(TripleStore& store, const std::string& subject, const TypeRef& type,
                           const std::vector<ParamRef>& links, std::string_view rdf_class) {
  store.insert({Term::iri(subject), Term::iri(ns(kRdfNamespace, "type")),
                Term::iri(ns(kProcessNamespace, rdf_class))});
  store.insert({Term::iri(subject), Term::iri(ns(kProcessNamespace, "parameterType")),
                Term::iri(type.iri())});
  for (const ParamRef& target : links)
    store.insert({Term::iri(subject), Term::iri(ns(kProcessNamespace, "links")),
                  Term::iri(param_iri(target))});
}

}  // namespace

TripleStore build_store(const std::vector<ServiceAnnotation>& services) {
  TripleStore store;
  store.prefixes().add("kb", std::string(kKbNamespace));
  store.prefixes().add("proc", std::string(kProcessNamespace));
  store.prefixes().add("prof", std::string(kProfileNamespace));
  store.prefixes().add("rdf", std::string(kRdfNamespace));
  store.prefixes().add("xsd", std::string(kXsdNamespace));

  std::set<std::string> seen;
  for (const ServiceAnnotation& svc : services) {
    if (!seen.insert(svc.name).second)
      throw Error(ErrorKind::DuplicateService, "service '" + svc.name + "' appears twice");

    std::string profile = ns(kKbNamespace, svc.name + "_profile");
    store.insert({Term::iri(profile), Term::iri(ns(kRdfNamespace, "type")),
                  Term::iri(ns(kProfileNamespace, "Profile"))});
    if (svc.profile.refers_to.has_value())
      store.insert({Term::iri(profile), Term::iri(ns(kProfileNamespace, "refers-to")),
                    Term::iri(svc.profile.refers_to->iri)});

    for (const Parameter& p : svc.inputs) {
      std::string subject = param_iri({svc.name, p.name});
      store.insert({Term::iri(profile), Term::iri(ns(kProfileNamespace, "hasInput")), Term::iri(subject)});
      add_parameter_triples(store, subject, p.type, p.links, "Input");
    }
    for (const OutputDecl& o : svc.outputs) {
      std::string subject = param_iri({svc.name, o.base.name});
      store.insert({Term::iri(profile), Term::iri(ns(kProfileNamespace, "hasOutput")), Term::iri(subject)});
      add_parameter_triples(store, subject, o.base.type, o.base.links, "Output");
      for (const NlogParameter& e : o.expansions) {
        std::string expansion = param_iri({svc.name, e.name});
        store.insert({Term::iri(subject), Term::iri(ns(kProcessNamespace, "nlogExpandsTo")),
                      Term::iri(expansion)});
        add_parameter_triples(store, expansion, e.type, e.links, "NlogParameter");
        store.insert({Term::iri(expansion), Term::iri(ns(kProcessNamespace, "hasID")),
                      Term::literal(e.markup_id)});
        if (!e.label.empty())
          store.insert({Term::iri(expansion), Term::iri(ns(kProcessNamespace, "hasLabel")),
                        Term::literal(e.label)});
      }
    }
  }
  return store;
}

std::vector<TriplePattern> parse_patterns(const std::string& text, const TripleStore& store) {
  // Tokenize, keeping quoted literals whole.
  std::vector<std::string> tokens;
  std::string current;
  bool quoted = false;
  for (char c : text) {
    if (quoted) {
      current += c;
      if (c == '"') {
        tokens.push_back(current);
        current.clear();
        quoted = false;
      }
    } else if (c == '"') {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
      current += c;
      quoted = true;
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated string literal in query");
  if (!current.empty()) tokens.push_back(current);

  auto resolve = [&store](const std::string& token) -> Term {
    if (token.front() == '?') {
      if (token.size() == 1) throw Error(ErrorKind::ParseError, "empty variable name");
      return Term::variable(token.substr(1));
    }
    if (token.front() == '"' && token.back() == '"' && token.size() >= 2)
      return Term::literal(token.substr(1, token.size() - 2));
    if (token.front() == '<' && token.back() == '>') return Term::iri(token.substr(1, token.size() - 2));
    if (token.find("://") != std::string::npos) return Term::iri(token);
    auto colon = token.find(':');
    if (colon != std::string::npos && colon > 0 && store.prefixes().find(token.substr(0, colon)) != nullptr)
      return Term::iri(store.prefixes().expand(token));

    // Bare token: match by identifier local name when that is unambiguous.
    std::set<std::string> matches;
    for (const Triple& t : store.triples()) {
      for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
        if (term->kind == TermKind::Iri && local_name(term->value) == token) matches.insert(term->value);
      }
    }
    if (matches.size() == 1) return Term::iri(*matches.begin());
    if (matches.size() > 1)
      throw Error(ErrorKind::ParseError,
                  "name '" + token + "' is ambiguous in this store; use a prefixed or full identifier");
    return Term::literal(token);
  };

  std::vector<TriplePattern> patterns;
  std::vector<Term> slots;
  for (const std::string& token : tokens) {
    if (token == ".") {
      if (!slots.empty()) {
        if (slots.size() != 3) throw Error(ErrorKind::ParseError, "each pattern needs exactly 3 terms");
        patterns.push_back({slots[0], slots[1], slots[2]});
        slots.clear();
      }
      continue;
    }
    slots.push_back(resolve(token));
  }
  if (!slots.empty()) {
    if (slots.size() != 3) throw Error(ErrorKind::ParseError, "each pattern needs exactly 3 terms");
    patterns.push_back({slots[0], slots[1], slots[2]});
  }
  return patterns;
}

}  // namespace nlogflow
