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

#include "nlogflow/textutil.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nlogflow/error.hpp"

namespace nlogflow {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view strip_comment(std::string_view line) {
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || is_space(line[i - 1]))) return line.substr(0, i);
  }
  return line;
}

std::string_view trim(std::string_view s) {
  size_t begin = 0;
  while (begin < s.size() && is_space(s[begin])) ++begin;
  size_t end = s.size();
  while (end > begin && is_space(s[end - 1])) --end;
  return s.substr(begin, end - begin);
}

}  // namespace

std::vector<std::string> split_statement(std::string_view line) {
  std::string_view body = strip_comment(line);
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && is_space(body[i])) ++i;
    size_t start = i;
    while (i < body.size() && !is_space(body[i])) ++i;
    if (i > start) tokens.emplace_back(body.substr(start, i - start));
  }
  return tokens;
}

std::string rest_after_tokens(std::string_view line, size_t n) {
  std::string_view body = strip_comment(line);
  size_t i = 0;
  for (size_t token = 0; token < n; ++token) {
    while (i < body.size() && is_space(body[i])) ++i;
    while (i < body.size() && !is_space(body[i])) ++i;
  }
  return std::string(trim(body.substr(i)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace nlogflow
