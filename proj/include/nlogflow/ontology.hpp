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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nlogflow/names.hpp"

namespace nlogflow {

struct ClassId {
  std::string iri;
  auto operator<=>(const ClassId&) const = default;
};

struct PropertyId {
  std::string iri;
  auto operator<=>(const PropertyId&) const = default;
};

enum class RestrictionKind { Cardinality, AllValuesFrom };

/// A qualified restriction on a property. Cardinality bounds are inclusive;
/// an absent max means unbounded. AllValuesFrom carries min=0, max=unbounded.
struct Restriction {
  PropertyId property;
  ClassId qualifier;
  RestrictionKind kind = RestrictionKind::Cardinality;
  int min = 0;
  std::optional<int> max;

  auto operator<=>(const Restriction&) const = default;
};

/// Renders a restriction the way the ontology format spells it, e.g.
/// "has-for-data-at exactly 2 Mr-dataset".
std::string describe(const Restriction& restriction, const PrefixTable& prefixes);

struct ClassDef {
  ClassId id;
  std::vector<ClassId> parents;
  std::vector<Restriction> restrictions;
};

/// One concrete role assertion a candidate instance would carry, typed by
/// its most-specific declared class.
struct RoleFiller {
  PropertyId property;
  ClassId type;
};

struct Violation {
  Restriction constraint;
  int observed = 0;
};

struct ConsistencyVerdict {
  bool consistent = true;
  std::vector<Violation> violations;
};

/// The domain taxonomy: dataset and data-processing class trees with
/// qualified restrictions. Immutable after load; all queries are const.
class Ontology {
public:
  /// Parses the native line-oriented format:
  ///   @prefix p: <uri>
  ///   class <id> [subClassOf <id>[, <id>...]]
  ///   restrict <class> <property> (exactly N | min N | max N | only) <qualifier>
  /// '#' starts a comment. Throws ParseError, CycleError, or DanglingRef.
  static Ontology load(const std::string& text);

  std::string serialize() const;

  bool has_class(const ClassId& id) const;
  bool has_property(const PropertyId& id) const;
  const ClassDef& class_def(const ClassId& id) const;
  const std::vector<ClassId>& classes() const { return order_; }
  const std::vector<PropertyId>& properties() const { return properties_; }
  std::optional<PropertyId> property_by_local_name(std::string_view name) const;
  const PrefixTable& prefixes() const { return prefixes_; }

  /// Reflexive-transitive subclass test over the parent edges.
  bool is_subclass_of(const ClassId& sub, const ClassId& sup) const;

  /// Restrictions declared on the class and all its ancestors,
  /// ancestor-first, duplicates retained.
  std::vector<Restriction> effective_restrictions(const ClassId& id) const;

  /// Counting consistency check: every Cardinality constraint must see a
  /// subsumption-qualified filler count within its bounds, every
  /// AllValuesFrom constraint only conforming fillers. Violations report
  /// the observed count per failed constraint.
  ConsistencyVerdict check_filler_consistency(const std::vector<Restriction>& constraints,
                                              const std::vector<RoleFiller>& fillers) const;

private:
  std::vector<ClassId> order_;
  std::map<ClassId, ClassDef> classes_;
  std::map<ClassId, std::set<ClassId>> ancestors_;  // reflexive-transitive closure
  std::vector<PropertyId> properties_;
  PrefixTable prefixes_;

  void require_class(const ClassId& id) const;
  void compute_closure();
};

}  // namespace nlogflow
