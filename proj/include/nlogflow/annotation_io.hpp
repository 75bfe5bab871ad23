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

#include "nlogflow/names.hpp"
#include "nlogflow/semodel.hpp"

namespace nlogflow {

/// A service annotation together with the prefix table of the file it was
/// read from, so rewrites keep the author's CURIE spellings.
struct AnnotationFile {
  PrefixTable prefixes;
  ServiceAnnotation service;
};

/// Parses the native annotation format (see README, "Annotation files").
AnnotationFile parse_annotation(const std::string& text);

/// Canonical serialization: stable section order, two-space indentation.
/// parse -> serialize -> parse is the identity on the annotation content,
/// and serializing twice yields identical bytes.
std::string serialize_annotation(const AnnotationFile& file);

}  // namespace nlogflow
