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

#include <string>
#include <vector>

#include "nlogflow/ontology.hpp"
#include "nlogflow/semodel.hpp"

namespace nlogflow {

// Canonical local names of the two role properties driving the check.
inline constexpr std::string_view kHasForDataAt = "has-for-data-at";
inline constexpr std::string_view kHasForResultAt = "has-for-result-at";

/// An exact-cardinality assertion derived from one group of parameters:
/// `count` parameters of direction `direction` share the exact class
/// `qualifier`. Inputs map to has-for-data-at, outputs to has-for-result-at.
struct DerivedAxiom {
  Direction direction = Direction::Input;
  PropertyId property;  // canonical local name; resolved against the ontology
  ClassId qualifier;
  int count = 0;
};

struct ProfileVerdict {
  bool consistent = false;
  std::string tmp_class_name;
  std::vector<DerivedAxiom> derived;
  std::vector<Violation> violations;
};

/// Groups the service's ontology-typed parameters by (direction, exact
/// class). Builtin-typed parameters (stdout, stderr) do not participate;
/// output counting uses the expanded parameters. Order is canonical:
/// inputs before outputs, then by qualifier identifier.
std::vector<DerivedAxiom> derive_axioms(const ServiceAnnotation& service);

/// The profile-versus-data-processing consistency check: the derived
/// axioms, attached to an ephemeral subclass of the profile's referred
/// class, must satisfy every restriction the referred class inherits.
/// The loaded ontology is never mutated. Throws UnknownClass when the
/// profile reference is missing or undeclared, UnknownProperty when the
/// ontology lacks the two role properties while they are needed.
ProfileVerdict check_profile(const ServiceAnnotation& service, const Ontology& ontology);

}  // namespace nlogflow
