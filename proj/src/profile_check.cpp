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

#include "nlogflow/profile_check.hpp"

#include <algorithm>
#include <map>

#include "nlogflow/error.hpp"

namespace nlogflow {

std::vector<DerivedAxiom> derive_axioms(const ServiceAnnotation& service) {
  std::map<ClassId, int> input_groups;
  std::map<ClassId, int> output_groups;

  for (const Parameter& p : service.inputs) {
    if (p.type.is_class()) ++input_groups[p.type.class_id()];
  }
  for (const OutputDecl& o : service.outputs) {
    if (o.expansions.empty()) {
      if (o.base.type.is_class()) ++output_groups[o.base.type.class_id()];
    } else {
      for (const NlogParameter& e : o.expansions) {
        if (e.type.is_class()) ++output_groups[e.type.class_id()];
      }
    }
  }

  std::vector<DerivedAxiom> axioms;
  for (const auto& [qualifier, count] : input_groups)
    axioms.push_back({Direction::Input, PropertyId{std::string(kHasForDataAt)}, qualifier, count});
  for (const auto& [qualifier, count] : output_groups)
    axioms.push_back({Direction::Output, PropertyId{std::string(kHasForResultAt)}, qualifier, count});
  return axioms;
}

ProfileVerdict check_profile(const ServiceAnnotation& service, const Ontology& ontology) {
  if (!service.profile.refers_to.has_value())
    throw Error(ErrorKind::UnknownClass,
                "profile of '" + service.name + "' refers to no data-processing class");
  const ClassId& referred = *service.profile.refers_to;
  if (!ontology.has_class(referred))
    throw Error(ErrorKind::UnknownClass, "class '" + referred.iri + "' is not declared");

  ProfileVerdict verdict;
  verdict.tmp_class_name = "tmp_" + service.profile.name + "_" + local_name(referred.iri);
  verdict.derived = derive_axioms(service);

  // Materialize the derived axioms as the role fillers the ephemeral
  // subclass instance would carry.
  std::vector<RoleFiller> fillers;
  for (const DerivedAxiom& axiom : verdict.derived) {
    std::string_view wanted = axiom.direction == Direction::Input ? kHasForDataAt : kHasForResultAt;
    std::optional<PropertyId> property = ontology.property_by_local_name(wanted);
    if (!property.has_value())
      throw Error(ErrorKind::UnknownProperty,
                  "ontology declares no '" + std::string(wanted) + "' property");
    for (int i = 0; i < axiom.count; ++i) fillers.push_back({*property, axiom.qualifier});
  }

  std::vector<Restriction> constraints = ontology.effective_restrictions(referred);
  ConsistencyVerdict result = ontology.check_filler_consistency(constraints, fillers);
  verdict.consistent = result.consistent;
  verdict.violations = std::move(result.violations);
  return verdict;
}

}  // namespace nlogflow
