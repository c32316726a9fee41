// Copyright 2026 The esope-bridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dot_oracle.h"

#include <cctype>
#include <string>
#include <vector>

namespace oracle {

namespace {

const char* const kWords[] = {"lt", "le", "gt", "ge", "eq", "ne", "and",
                              "or", "not", "eqv", "neqv", "true", "false"};

bool ident(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::size_t count_line(const std::string& s) {
  const std::size_t n = s.size();
  std::vector<bool> literal(n, false);
  std::vector<bool> taken(n, false);

  char quote = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (quote != 0) {
      literal[i] = true;
      if (s[i] == quote) {
        if (i + 1 < n && s[i + 1] == quote) {
          literal[++i] = true;
        } else {
          quote = 0;
        }
      }
    } else if (s[i] == '\'' || s[i] == '"') {
      quote = s[i];
      literal[i] = true;
    }
  }

  // `.word.` operators and constants.
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != '.' || literal[i]) continue;
    for (const char* w : kWords) {
      std::string word(w);
      std::size_t close = i + 1 + word.size();
      if (close >= n || s[close] != '.') continue;
      bool same = true;
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (std::tolower(static_cast<unsigned char>(s[i + 1 + k])) != word[k]) {
          same = false;
        }
      }
      if (same) {
        taken[i] = true;
        taken[close] = true;
      }
    }
  }

  // Real literals: a digit run not glued to a name, then the dot.
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] != '.' || literal[i] || taken[i]) continue;
    std::size_t j = i;
    while (j > 0 && digit(s[j - 1])) --j;
    bool digits_before = j < i && (j == 0 || !ident(s[j - 1]));
    bool digits_after = i + 1 < n && digit(s[i + 1]);
    bool name_before = i > 0 && ident(s[i - 1]) && !digits_before;
    if (digits_before || (digits_after && !name_before)) taken[i] = true;
  }

  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i] != '.' || literal[i] || taken[i]) continue;
    if (ident(s[i - 1]) && alpha(s[i + 1])) ++count;
  }
  return count;
}

}  // namespace

std::size_t count_access_dots(std::string_view source) {
  std::size_t total = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string line(source.substr(start, end - start));
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    char c = line[0];
    if (c == 'c' || c == 'C' || c == '*' || c == '!' || c == '#') continue;
    if (line.size() <= 6) continue;
    std::string field = line.substr(6, 66);
    std::string head;
    for (char ch : field) {
      if (ch != ' ') head.push_back(static_cast<char>(std::tolower(
                         static_cast<unsigned char>(ch))));
    }
    if (head.rfind("pointeur", 0) == 0) continue;
    total += count_line(field);
  }
  return total;
}

}  // namespace oracle
