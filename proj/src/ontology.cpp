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

#include "nlogflow/ontology.hpp"

#include <algorithm>
#include <sstream>

#include "nlogflow/error.hpp"
#include "nlogflow/textutil.hpp"

namespace nlogflow {

std::string describe(const Restriction& restriction, const PrefixTable& prefixes) {
  std::string prop = prefixes.compress(restriction.property.iri);
  std::string qual = prefixes.compress(restriction.qualifier.iri);
  if (restriction.kind == RestrictionKind::AllValuesFrom) return prop + " only " + qual;
  if (restriction.max.has_value() && restriction.min == *restriction.max)
    return prop + " exactly " + std::to_string(restriction.min) + " " + qual;
  if (!restriction.max.has_value()) return prop + " min " + std::to_string(restriction.min) + " " + qual;
  if (restriction.min == 0) return prop + " max " + std::to_string(*restriction.max) + " " + qual;
  return prop + " min " + std::to_string(restriction.min) + " max " + std::to_string(*restriction.max) + " " + qual;
}

namespace {

int parse_count(const std::string& token, int line) {
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size() || value < 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "expected a non-negative count, got '" + token + "'", line);
  }
}

}  // namespace

Ontology Ontology::load(const std::string& text) {
  Ontology onto;
  onto.prefixes_.add("xsd", std::string(kXsdNamespace));

  struct PendingRestriction {
    ClassId subject;
    Restriction restriction;
    int line;
  };
  std::vector<PendingRestriction> pending;

  int line_no = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> tokens = split_statement(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "@prefix") {
      if (tokens.size() != 3 || tokens[1].empty() || tokens[1].back() != ':')
        throw Error(ErrorKind::ParseError, "expected '@prefix p: <uri>'", line_no);
      std::string prefix = tokens[1].substr(0, tokens[1].size() - 1);
      std::string uri = tokens[2];
      if (uri.size() >= 2 && uri.front() == '<' && uri.back() == '>') uri = uri.substr(1, uri.size() - 2);
      onto.prefixes_.add(prefix, uri);
    } else if (tokens[0] == "class") {
      if (tokens.size() < 2) throw Error(ErrorKind::ParseError, "class statement needs a name", line_no);
      ClassDef def;
      def.id = ClassId{onto.prefixes_.expand(tokens[1])};
      if (onto.classes_.count(def.id) != 0)
        throw Error(ErrorKind::ParseError, "class '" + tokens[1] + "' declared twice", line_no);
      if (tokens.size() > 2) {
        if (tokens[2] != "subClassOf" || tokens.size() < 4)
          throw Error(ErrorKind::ParseError, "expected 'subClassOf <id>[, <id>...]'", line_no);
        for (size_t i = 3; i < tokens.size(); ++i) {
          std::string token = tokens[i];
          if (!token.empty() && token.back() == ',') token.pop_back();
          if (token.empty()) continue;
          def.parents.push_back(ClassId{onto.prefixes_.expand(token)});
        }
      }
      onto.order_.push_back(def.id);
      onto.classes_.emplace(def.id, std::move(def));
    } else if (tokens[0] == "restrict") {
      if (tokens.size() < 5)
        throw Error(ErrorKind::ParseError, "expected 'restrict <class> <property> <kind...> <qualifier>'", line_no);
      PendingRestriction item;
      item.line = line_no;
      item.subject = ClassId{onto.prefixes_.expand(tokens[1])};
      item.restriction.property = PropertyId{onto.prefixes_.expand(tokens[2])};
      const std::string& kind = tokens[3];
      size_t qualifier_index = 0;
      if (kind == "only") {
        item.restriction.kind = RestrictionKind::AllValuesFrom;
        qualifier_index = 4;
      } else if (kind == "exactly" || kind == "min" || kind == "max") {
        if (tokens.size() < 6) throw Error(ErrorKind::ParseError, "'" + kind + "' needs a count", line_no);
        int n = parse_count(tokens[4], line_no);
        item.restriction.kind = RestrictionKind::Cardinality;
        if (kind == "exactly") {
          item.restriction.min = n;
          item.restriction.max = n;
        } else if (kind == "min") {
          item.restriction.min = n;
        } else {
          item.restriction.max = n;
        }
        qualifier_index = 5;
      } else {
        throw Error(ErrorKind::ParseError, "unknown restriction kind '" + kind + "'", line_no);
      }
      if (tokens.size() != qualifier_index + 1)
        throw Error(ErrorKind::ParseError, "malformed restrict statement", line_no);
      item.restriction.qualifier = ClassId{onto.prefixes_.expand(tokens[qualifier_index])};
      PropertyId prop = item.restriction.property;
      if (std::find(onto.properties_.begin(), onto.properties_.end(), prop) == onto.properties_.end())
        onto.properties_.push_back(prop);
      pending.push_back(std::move(item));
    } else {
      throw Error(ErrorKind::ParseError, "unknown statement '" + tokens[0] + "'", line_no);
    }
  }

  for (const auto& [id, def] : onto.classes_) {
    for (const ClassId& parent : def.parents) {
      if (onto.classes_.count(parent) == 0)
        throw Error(ErrorKind::DanglingRef,
                    "class '" + id.iri + "' has undeclared parent '" + parent.iri + "'");
    }
  }
  for (const PendingRestriction& item : pending) {
    auto it = onto.classes_.find(item.subject);
    if (it == onto.classes_.end())
      throw Error(ErrorKind::DanglingRef, "restriction on undeclared class '" + item.subject.iri + "'", item.line);
    if (onto.classes_.count(item.restriction.qualifier) == 0)
      throw Error(ErrorKind::DanglingRef,
                  "restriction qualifier '" + item.restriction.qualifier.iri + "' is undeclared", item.line);
    it->second.restrictions.push_back(item.restriction);
  }

  onto.compute_closure();
  return onto;
}

void Ontology::compute_closure() {
  enum class Mark { Unvisited, InProgress, Done };
  std::map<ClassId, Mark> marks;

  // Iterative DFS; detects subclass cycles and reports the offending path.
  std::vector<ClassId> stack;
  auto visit = [&](const ClassId& start, auto&& self) -> void {
    Mark& mark = marks[start];
    if (mark == Mark::Done) return;
    if (mark == Mark::InProgress) {
      std::string path;
      auto begin = std::find(stack.begin(), stack.end(), start);
      for (auto it = begin; it != stack.end(); ++it) path += prefixes_.compress(it->iri) + " -> ";
      path += prefixes_.compress(start.iri);
      throw Error(ErrorKind::CycleError, "subclass cycle: " + path);
    }
    mark = Mark::InProgress;
    stack.push_back(start);
    std::set<ClassId> closure;
    closure.insert(start);
    for (const ClassId& parent : classes_.at(start).parents) {
      self(parent, self);
      const std::set<ClassId>& above = ancestors_.at(parent);
      closure.insert(above.begin(), above.end());
    }
    stack.pop_back();
    ancestors_[start] = std::move(closure);
    marks[start] = Mark::Done;
  };

  for (const ClassId& id : order_) visit(id, visit);
}

std::string Ontology::serialize() const {
  std::ostringstream out;
  for (const auto& [prefix, uri] : prefixes_.entries()) {
    if (prefix == "xsd" && uri == kXsdNamespace) continue;
    out << "@prefix " << prefix << ": <" << uri << ">\n";
  }
  if (!prefixes_.empty()) out << "\n";
  for (const ClassId& id : order_) {
    const ClassDef& def = classes_.at(id);
    out << "class " << prefixes_.compress(id.iri);
    for (size_t i = 0; i < def.parents.size(); ++i)
      out << (i == 0 ? " subClassOf " : ", ") << prefixes_.compress(def.parents[i].iri);
    out << "\n";
  }
  bool first = true;
  for (const ClassId& id : order_) {
    for (const Restriction& r : classes_.at(id).restrictions) {
      if (first) {
        out << "\n";
        first = false;
      }
      std::string subject = prefixes_.compress(id.iri);
      if (r.kind == RestrictionKind::Cardinality && r.min > 0 && r.max.has_value() && r.min != *r.max) {
        // The format has no combined min/max statement; split into two.
        Restriction lower = r;
        lower.max.reset();
        Restriction upper = r;
        upper.min = 0;
        out << "restrict " << subject << " " << describe(lower, prefixes_) << "\n";
        out << "restrict " << subject << " " << describe(upper, prefixes_) << "\n";
      } else {
        out << "restrict " << subject << " " << describe(r, prefixes_) << "\n";
      }
    }
  }
  return out.str();
}

bool Ontology::has_class(const ClassId& id) const { return classes_.count(id) != 0; }

bool Ontology::has_property(const PropertyId& id) const {
  return std::find(properties_.begin(), properties_.end(), id) != properties_.end();
}

void Ontology::require_class(const ClassId& id) const {
  if (!has_class(id)) throw Error(ErrorKind::UnknownClass, "class '" + id.iri + "' is not declared");
}

const ClassDef& Ontology::class_def(const ClassId& id) const {
  require_class(id);
  return classes_.at(id);
}

std::optional<PropertyId> Ontology::property_by_local_name(std::string_view name) const {
  for (const PropertyId& prop : properties_) {
    if (local_name(prop.iri) == name) return prop;
  }
  return std::nullopt;
}

bool Ontology::is_subclass_of(const ClassId& sub, const ClassId& sup) const {
  require_class(sub);
  require_class(sup);
  return ancestors_.at(sub).count(sup) != 0;
}

std::vector<Restriction> Ontology::effective_restrictions(const ClassId& id) const {
  require_class(id);
  std::vector<Restriction> out;
  std::set<ClassId> seen;
  auto gather = [&](const ClassId& current, auto&& self) -> void {
    if (!seen.insert(current).second) return;
    const ClassDef& def = classes_.at(current);
    for (const ClassId& parent : def.parents) self(parent, self);
    out.insert(out.end(), def.restrictions.begin(), def.restrictions.end());
  };
  gather(id, gather);
  return out;
}

ConsistencyVerdict Ontology::check_filler_consistency(const std::vector<Restriction>& constraints,
                                                      const std::vector<RoleFiller>& fillers) const {
  for (const Restriction& c : constraints) {
    if (!has_property(c.property))
      throw Error(ErrorKind::UnknownProperty, "property '" + c.property.iri + "' is not declared");
    require_class(c.qualifier);
  }
  for (const RoleFiller& f : fillers) {
    if (!has_property(f.property))
      throw Error(ErrorKind::UnknownProperty, "property '" + f.property.iri + "' is not declared");
    require_class(f.type);
  }

  ConsistencyVerdict verdict;
  for (const Restriction& c : constraints) {
    int observed = 0;
    if (c.kind == RestrictionKind::Cardinality) {
      for (const RoleFiller& f : fillers) {
        if (f.property == c.property && is_subclass_of(f.type, c.qualifier)) ++observed;
      }
      if (observed < c.min || (c.max.has_value() && observed > *c.max))
        verdict.violations.push_back({c, observed});
    } else {
      for (const RoleFiller& f : fillers) {
        if (f.property == c.property && !is_subclass_of(f.type, c.qualifier)) ++observed;
      }
      if (observed > 0) verdict.violations.push_back({c, observed});
    }
  }
  verdict.consistent = verdict.violations.empty();
  return verdict;
}

}  // namespace nlogflow
