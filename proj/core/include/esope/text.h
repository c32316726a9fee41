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

// Small ASCII helpers shared by the pipeline stages.

#ifndef ESOPE_TEXT_H_
#define ESOPE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace esope::text {

inline bool is_blank(char c) { return c == ' ' || c == '\t'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_ident_char(char c) {
  return is_letter(c) || is_digit(c) || c == '_' || c == '$';
}
inline bool is_quote(char c) { return c == '\'' || c == '"'; }

inline char to_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}
inline char to_upper(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string lower(std::string_view s);
std::string upper(std::string_view s);
std::string_view trim(std::string_view s);
std::string_view rtrim(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view s, std::string_view prefix);

// literal_mask(s)[i] is true when s[i] belongs to a character literal,
// delimiters included. A doubled quote inside a literal is an escape.
std::vector<bool> literal_mask(std::string_view s);

// Removes blanks outside character literals.
std::string strip_blanks(std::string_view s);

}  // namespace esope::text

#endif  // ESOPE_TEXT_H_
