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

#include "esope/island.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "esope/fixedform.h"
#include "esope/text.h"

namespace esope::island {

bool is_segment_keyword(std::string_view word) {
  return std::any_of(std::begin(kSegmentKeywords), std::end(kSegmentKeywords),
                     [&](std::string_view k) { return text::iequals(k, word); });
}

bool is_dot_keyword(std::string_view word) {
  return std::any_of(std::begin(kDotKeywords), std::end(kDotKeywords),
                     [&](std::string_view k) { return text::iequals(k, word); });
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kSegBegin:
      return "seg_begin";
    case Rule::kSegEnd:
      return "seg_end";
    case Rule::kPointerDecl:
      return "pointer_decl";
    case Rule::kSegStatement:
      return "seg_statement";
    case Rule::kDotNotation:
      return "dot_notation";
    case Rule::kSlashNotation:
      return "slash_notation";
  }
  return "?";
}

std::size_t RewriteLog::count(Rule rule) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [&](const RewriteRecord& r) { return r.rule == rule; }));
}

std::vector<MarkerCollision> scan_markers(std::string_view source,
                                          FileId file) {
  static constexpr std::string_view kMarkers[] = {kAnnotationMarker,
                                                  kDotMarker, kSlashMarker};
  std::vector<MarkerCollision> found;
  int line_no = 0;
  for (const std::string& line : fixedform::split_lines(source)) {
    ++line_no;
    std::string lowered = text::lower(line);
    for (std::size_t col = 0; col < lowered.size(); ++col) {
      for (std::string_view marker : kMarkers) {
        if (lowered.compare(col, marker.size(), text::lower(marker)) == 0) {
          int c = static_cast<int>(col) + 1;
          found.push_back({SourceSpan{file, line_no, c, line_no,
                                      c + static_cast<int>(marker.size()) - 1},
                           std::string(marker)});
        }
      }
    }
  }
  return found;
}

namespace {

enum class Head { kWater, kSegBegin, kSegEnd, kPointerDecl, kSegStatement };

bool has_assignment_equals(std::string_view s) {
  std::vector<bool> lit = text::literal_mask(s);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (lit[i]) continue;
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '=' && depth == 0) return true;
  }
  return false;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !text::is_letter(s.front())) return false;
  return std::all_of(s.begin(), s.end(), text::is_ident_char);
}

// `word.word [, word.word]...` with blanks already removed.
bool is_pointer_list(std::string_view s) {
  while (true) {
    std::size_t comma = s.find(',');
    std::string_view pair = s.substr(0, comma);
    std::size_t dot = pair.find('.');
    if (dot == std::string_view::npos || !is_identifier(pair.substr(0, dot)) ||
        !is_identifier(pair.substr(dot + 1))) {
      return false;
    }
    if (comma == std::string_view::npos) return true;
    s.remove_prefix(comma + 1);
  }
}

// Keyword followed by a comma or by a blank and more text; `SEGINIT = 3` or
// `SEGINI = 3` stay water.
bool keyword_head(std::string_view lowered, std::string_view keyword) {
  if (!lowered.starts_with(keyword)) return false;
  std::string_view rest = lowered.substr(keyword.size());
  if (rest.empty()) return false;
  if (rest.front() == ',') return true;
  return text::is_blank(rest.front()) && !text::trim(rest).empty();
}

Head classify_head(const fixedform::LogicalStatement& stmt) {
  std::string lowered = text::lower(text::trim(stmt.text));
  std::string compact = text::strip_blanks(lowered);
  if (compact == "endsegment") return Head::kSegEnd;
  if (has_assignment_equals(compact)) return Head::kWater;

  if (keyword_head(lowered, "segment")) {
    std::string_view name = std::string_view(compact).substr(7);
    if (!name.empty() && name.front() == ',') name.remove_prefix(1);
    return is_identifier(name) ? Head::kSegBegin : Head::kWater;
  }
  if (keyword_head(lowered, "pointeur")) {
    if (!is_pointer_list(std::string_view(compact).substr(8))) {
      throw Error(ErrorCode::kMalformedPointerDecl,
                  "expected 'POINTEUR var.segment[, var.segment]...', got '" +
                      std::string(text::trim(stmt.text)) + "'",
                  stmt.span);
    }
    return Head::kPointerDecl;
  }
  for (std::string_view kw : kSegmentKeywords) {
    if (keyword_head(lowered, kw)) return Head::kSegStatement;
  }
  return Head::kWater;
}

// Length of a `.op.` starting at s[i], or 0.
std::size_t dot_operator_length(std::string_view s, std::size_t i) {
  std::size_t j = i + 1;
  while (j < s.size() && text::is_letter(s[j])) ++j;
  if (j == i + 1 || j >= s.size() || s[j] != '.') return 0;
  return is_dot_keyword(s.substr(i + 1, j - i - 1)) ? j - i + 1 : 0;
}

std::size_t word_end(std::string_view s, std::size_t i) {
  while (i < s.size() && text::is_ident_char(s[i])) ++i;
  return i;
}

struct SlashMatch {
  std::size_t end;  // one past ')'
  std::string index;
};

std::optional<SlashMatch> match_slash(std::string_view s, std::size_t i) {
  auto skip = [&](std::size_t k) {
    while (k < s.size() && text::is_blank(s[k])) ++k;
    return k;
  };
  if (i >= s.size() || s[i] != '(') return std::nullopt;
  std::size_t k = skip(i + 1);
  if (k >= s.size() || s[k] != '/') return std::nullopt;
  k = skip(k + 1);
  std::size_t digits = k;
  while (k < s.size() && text::is_digit(s[k])) ++k;
  if (k == digits) return std::nullopt;
  std::string index(s.substr(digits, k - digits));
  k = skip(k);
  if (k >= s.size() || s[k] != ')') return std::nullopt;
  return SlashMatch{k + 1, std::move(index)};
}

bool opens_slash(std::string_view s, std::size_t i) {
  if (i >= s.size() || s[i] != '(') return false;
  std::size_t k = i + 1;
  while (k < s.size() && text::is_blank(s[k])) ++k;
  return k < s.size() && s[k] == '/';
}

// Rewrites dot and slash notation inside one statement. Returns nullopt when
// nothing changed.
std::optional<std::string> rewrite_accesses(
    const fixedform::LogicalStatement& stmt, std::vector<RewriteRecord>& records,
    Diagnostics& diagnostics) {
  const std::string& s = stmt.text;
  std::vector<bool> lit = text::literal_mask(s);
  std::string out;
  out.reserve(s.size() + 16);
  bool changed = false;

  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (lit[i]) {
      out.push_back(c);
      ++i;
      continue;
    }
    if (c == '.') {
      std::size_t op = dot_operator_length(s, i);
      std::size_t n = op == 0 ? 1 : op;
      out.append(s, i, n);
      i += n;
      continue;
    }
    bool word_start =
        text::is_letter(c) && (i == 0 || !text::is_ident_char(s[i - 1]));
    if (!word_start) {
      out.push_back(c);
      ++i;
      continue;
    }

    std::size_t start = i;
    std::size_t j = word_end(s, i);
    std::string access = s.substr(i, j - i);
    bool dotted = false;
    while (j + 1 < s.size() && s[j] == '.' && !lit[j + 1] &&
           text::is_letter(s[j + 1])) {
      std::size_t k = word_end(s, j + 1);
      std::string_view member = std::string_view(s).substr(j + 1, k - j - 1);
      if (is_dot_keyword(member)) break;
      access = std::string(kDotMarker) + access + "," + std::string(member) +
               ")";
      records.push_back({Rule::kDotNotation, stmt.span_of(start, k - 1),
                         s.substr(start, k - start), access});
      dotted = true;
      j = k;
    }
    if (auto slash = match_slash(s, j)) {
      access = std::string(kSlashMarker) + access + "," + slash->index + ")";
      records.push_back({Rule::kSlashNotation,
                         stmt.span_of(start, slash->end - 1),
                         s.substr(start, slash->end - start), access});
      j = slash->end;
      changed = true;
    } else if (dotted && opens_slash(s, j)) {
      diagnostics.push_back(
          {"MalformedSlash",
           "dimension query index must be an unsigned integer literal",
           stmt.span_of(start, j)});
    }
    changed = changed || dotted;
    out += access;
    i = j;
  }
  if (!changed) return std::nullopt;
  return out;
}

struct SourceLine {
  std::string content;
  std::string terminator;
};

std::vector<SourceLine> split_with_terminators(std::string_view source) {
  std::vector<SourceLine> lines;
  std::size_t start = 0;
  while (start < source.size()) {
    std::size_t end = source.find('\n', start);
    SourceLine line;
    if (end == std::string_view::npos) {
      line.content = std::string(source.substr(start));
      start = source.size();
    } else {
      line.content = std::string(source.substr(start, end - start));
      line.terminator = "\n";
      start = end + 1;
    }
    if (!line.content.empty() && line.content.back() == '\r') {
      line.content.pop_back();
      line.terminator.insert(line.terminator.begin(), '\r');
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

bool is_unit_end(const fixedform::LogicalStatement& stmt) {
  return text::iequals(text::strip_blanks(stmt.text), "end");
}

std::string join_lines(const std::vector<SourceLine>& lines,
                       const std::vector<int>& numbers) {
  std::string joined;
  for (int n : numbers) {
    if (!joined.empty()) joined.push_back('\n');
    joined += lines[n - 1].content;
  }
  return joined;
}

// Columns 1-6 of an initial line, keeping the original label layout when the
// line has no tabs there.
std::string line_prefix(const std::string& raw, std::optional<int> label) {
  std::string head = raw.substr(0, std::min<std::size_t>(6, raw.size()));
  if (head.find('\t') == std::string::npos) {
    head.resize(6, ' ');
    return head;
  }
  return fixedform::render_statement("X", label).front().substr(0, 6);
}

}  // namespace

Result de_esopify(std::string_view source, FileId file) {
  Result result;
  result.log.file = file;

  for (const MarkerCollision& m : scan_markers(source, file)) {
    result.diagnostics.push_back(
        {"MarkerCollision",
         "source already contains the marker '" + m.marker + "'", m.span});
  }

  std::vector<SourceLine> lines = split_with_terminators(source);
  std::vector<fixedform::PhysicalLine> physical;
  physical.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    physical.push_back(fixedform::classify_line(
        lines[i].content, static_cast<int>(i) + 1, file));
  }

  std::map<int, std::vector<std::string>> replaced;
  std::set<int> dropped;
  std::optional<SourceSpan> open_segment;
  auto fail_open_segment = [&]() {
    throw Error(ErrorCode::kUnterminatedSegment,
                "SEGMENT has no matching END SEGMENT", *open_segment);
  };

  for (const fixedform::Unit& unit : fixedform::assemble(physical)) {
    const auto* stmt = std::get_if<fixedform::LogicalStatement>(&unit);
    if (stmt == nullptr) continue;

    Head head = classify_head(*stmt);
    if (head != Head::kWater) {
      Rule rule = head == Head::kSegBegin      ? Rule::kSegBegin
                  : head == Head::kSegEnd      ? Rule::kSegEnd
                  : head == Head::kPointerDecl ? Rule::kPointerDecl
                                               : Rule::kSegStatement;
      if (rule == Rule::kSegBegin) {
        if (open_segment) fail_open_segment();
        open_segment = stmt->span;
      } else if (rule == Rule::kSegEnd) {
        open_segment.reset();
      }
      if (stmt->label) {
        result.diagnostics.push_back(
            {"DroppedLabel", "label on an Esope statement is not kept",
             stmt->span});
      }
      std::string annotation = std::string(kAnnotationMarker) + "  " +
                               text::lower(text::trim(stmt->text));
      result.log.records.push_back(
          {rule, stmt->span, join_lines(lines, stmt->lines), annotation});
      replaced[stmt->lines.front()] = {annotation};
      for (std::size_t k = 1; k < stmt->lines.size(); ++k) {
        dropped.insert(stmt->lines[k]);
      }
      continue;
    }

    if (is_unit_end(*stmt) && open_segment) fail_open_segment();

    std::optional<std::string> rewritten =
        rewrite_accesses(*stmt, result.log.records, result.diagnostics);
    if (!rewritten) continue;

    int first = stmt->lines.front();
    std::string body(text::rtrim(*rewritten));
    if (stmt->lines.size() == 1 &&
        body.size() <= static_cast<std::size_t>(fixedform::kStatementWidth)) {
      replaced[first] = {line_prefix(lines[first - 1].content, stmt->label) +
                         body};
    } else {
      replaced[first] = fixedform::render_statement(body, stmt->label);
      for (std::size_t k = 1; k < stmt->lines.size(); ++k) {
        dropped.insert(stmt->lines[k]);
      }
    }
  }
  if (open_segment) fail_open_segment();

  std::stable_sort(result.log.records.begin(), result.log.records.end(),
                   [](const RewriteRecord& a, const RewriteRecord& b) {
                     return a.span.start() < b.span.start();
                   });

  if (replaced.empty()) {
    result.annotated_source = std::string(source);
    return result;
  }

  std::string& out = result.annotated_source;
  out.reserve(source.size() + source.size() / 4);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    if (dropped.count(line_no)) continue;
    auto it = replaced.find(line_no);
    if (it == replaced.end()) {
      out += lines[i].content;
      out += lines[i].terminator;
      continue;
    }
    const std::vector<std::string>& block = it->second;
    for (std::size_t k = 0; k < block.size(); ++k) {
      out += block[k];
      bool last = k + 1 == block.size();
      out += last ? lines[i].terminator
                  : (lines[i].terminator.empty() ? std::string("\n")
                                                 : lines[i].terminator);
    }
  }
  return result;
}

std::vector<SourceSpan> check_line_lengths(std::string_view annotated_source,
                                           FileId file) {
  std::vector<SourceSpan> spans;
  int line_no = 0;
  for (const std::string& raw : fixedform::split_lines(annotated_source)) {
    ++line_no;
    fixedform::PhysicalLine line = fixedform::classify_line(raw, line_no, file);
    if (line.kind != fixedform::LineKind::kInitial &&
        line.kind != fixedform::LineKind::kContinuation) {
      continue;
    }
    if (raw.size() <= static_cast<std::size_t>(fixedform::kLastColumn)) continue;
    std::string_view tail = std::string_view(raw).substr(fixedform::kLastColumn);
    if (text::trim(tail).empty()) continue;
    spans.push_back({file, line_no, fixedform::kLastColumn + 1, line_no,
                     static_cast<int>(raw.size())});
  }
  return spans;
}

}  // namespace esope::island
