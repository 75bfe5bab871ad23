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
#include <string_view>
#include <vector>

namespace nlogflow {

/// Tokenizes one statement line of the native formats: strips the trailing
/// comment ('#' at line start or after whitespace; '#' inside a token, as in
/// URIs, is kept) and splits on whitespace. Returns {} for blank lines.
std::vector<std::string> split_statement(std::string_view line);

/// Remainder of the line after the first `n` whitespace-separated tokens,
/// with surrounding whitespace and trailing comment removed. Used for
/// free-text fields such as labels.
std::string rest_after_tokens(std::string_view line, size_t n);

std::string read_file(const std::string& path);   // throws Error{IoError}
void write_file(const std::string& path, std::string_view content);

}  // namespace nlogflow
