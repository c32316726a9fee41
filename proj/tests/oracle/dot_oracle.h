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

// Brute-force reference count of member-access dots. Shares no code with
// the library: every `.` of every code line is classified on its own.

#ifndef ESOPE_TESTS_DOT_ORACLE_H_
#define ESOPE_TESTS_DOT_ORACLE_H_

#include <cstddef>
#include <string_view>

namespace oracle {

// Dots in columns 7-72 of non-comment lines that are flanked by identifier
// characters and are not part of a character literal, a `.kw.` logical
// operator or constant, or a real literal. POINTEUR lines are skipped: their
// `p.segment` dot binds a type and is not an access.
std::size_t count_access_dots(std::string_view source);

}  // namespace oracle

#endif  // ESOPE_TESTS_DOT_ORACLE_H_
