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

#include "esope/roundtrip.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "esope/emitter.h"
#include "esope/fixedform.h"
#include "esope/island.h"
#include "esope/parser.h"
#include "esope/pipeline.h"
#include "esope/recovery.h"
#include "esope/text.h"

namespace esope::roundtrip {

namespace fs = std::filesystem;

namespace {

std::optional<fs::path> resolve(const std::string& name,
                                const std::vector<fs::path>& include_paths,
                                const fs::path& origin) {
  fs::path target(name);
  std::vector<fs::path> candidates;
  if (target.is_absolute()) {
    candidates.push_back(target);
  } else {
    if (!origin.empty()) candidates.push_back(origin.parent_path() / target);
    for (const fs::path& dir : include_paths) candidates.push_back(dir / target);
  }
  for (const fs::path& c : candidates) {
    std::error_code ec;
    if (fs::is_regular_file(c, ec)) return c;
  }
  return std::nullopt;
}

std::string expand(std::string_view source,
                   const std::vector<fs::path>& include_paths,
                   const fs::path& origin, std::vector<fs::path>& chain) {
  std::string out;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < source.size()) {
    std::size_t nl = source.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? source.size() : nl + 1;
    std::string_view line = source.substr(pos, end - pos);
    pos = end;
    ++line_no;

    std::string_view bare = line;
    if (!bare.empty() && bare.back() == '\n') bare.remove_suffix(1);
    std::optional<std::string> name = fixedform::include_target(bare);
    if (!name) {
      out += line;
      continue;
    }
    std::optional<fs::path> found = resolve(*name, include_paths, origin);
    SourceSpan span{{}, line_no, 1, line_no,
                    std::max(1, static_cast<int>(text::rtrim(bare).size()))};
    if (!found) {
      throw Error(ErrorCode::kIncludeNotFound,
                  "include file '" + *name + "' not found", span);
    }
    fs::path key = fs::weakly_canonical(*found);
    if (std::find(chain.begin(), chain.end(), key) != chain.end()) {
      std::string text;
      for (const fs::path& p : chain) text += p.filename().string() + " -> ";
      text += key.filename().string();
      throw Error(ErrorCode::kIncludeCycle, "include cycle " + text, span);
    }
    chain.push_back(key);
    std::string body = expand(pipeline::read_file(*found), include_paths,
                              *found, chain);
    chain.pop_back();
    if (!body.empty() && body.back() != '\n') body.push_back('\n');
    out += body;
  }
  return out;
}

bool is_comment_line(std::string_view line) {
  return !line.empty() &&
         (line[0] == 'c' || line[0] == 'C' || line[0] == '*');
}

// `subroutine name()` with any blanks.
bool parameterless_subroutine(std::string_view stripped) {
  constexpr std::string_view kKeyword = "subroutine";
  if (stripped.substr(0, kKeyword.size()) != kKeyword) return false;
  std::string_view rest = stripped.substr(kKeyword.size());
  if (rest.size() < 3 || rest.substr(rest.size() - 2) != "()") return false;
  std::string_view name = rest.substr(0, rest.size() - 2);
  if (!text::is_letter(name[0])) return false;
  return std::all_of(name.begin(), name.end(), text::is_ident_char);
}

// Blanks inside character literals are kept, on comment lines too.
std::string remove_whitespace(std::string_view line) {
  std::vector<bool> lit = text::literal_mask(line);
  std::string out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    bool space = line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ||
                 line[i] == '\f' || line[i] == '\v';
    if (space && !lit[i]) continue;
    out.push_back(line[i]);
  }
  return out;
}

enum class Op { kEqual, kDelete, kInsert };

// Myers' O(ND) shortest edit script.
std::vector<Op> shortest_edit(const std::vector<NormalizedLine>& a,
                              const std::vector<NormalizedLine>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  const int offset = max + 1;
  std::vector<int> v(static_cast<std::size_t>(2 * max + 3), 0);
  std::vector<std::vector<int>> trace;
  auto at = [&](std::vector<int>& vec, int k) -> int& {
    return vec[static_cast<std::size_t>(k + offset)];
  };

  int depth = 0;
  for (int d = 0; d <= max; ++d) {
    trace.push_back(v);
    bool reached = false;
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && at(v, k - 1) < at(v, k + 1)))
                  ? at(v, k + 1)
                  : at(v, k - 1) + 1;
      int y = x - k;
      while (x < n && y < m && a[x].text == b[y].text) {
        ++x;
        ++y;
      }
      at(v, k) = x;
      if (x >= n && y >= m) {
        reached = true;
        break;
      }
    }
    if (reached) {
      depth = d;
      break;
    }
  }

  std::vector<Op> ops;
  int x = n;
  int y = m;
  for (int d = depth; d >= 0; --d) {
    std::vector<int>& prev = trace[static_cast<std::size_t>(d)];
    int k = x - y;
    int prev_k = (k == -d || (k != d && at(prev, k - 1) < at(prev, k + 1)))
                     ? k + 1
                     : k - 1;
    int prev_x = at(prev, prev_k);
    int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      ops.push_back(Op::kEqual);
      --x;
      --y;
    }
    if (d > 0) {
      if (x == prev_x) {
        ops.push_back(Op::kInsert);
        --y;
      } else {
        ops.push_back(Op::kDelete);
        --x;
      }
    }
    x = prev_x;
    y = prev_y;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

}  // namespace

std::string preprocess_includes(std::string_view source,
                                const std::vector<fs::path>& include_paths,
                                const fs::path& origin) {
  std::vector<fs::path> chain;
  if (!origin.empty()) chain.push_back(fs::weakly_canonical(origin));
  return expand(source, include_paths, origin, chain);
}

std::vector<NormalizedLine> normalize_lines(std::string_view source) {
  std::vector<NormalizedLine> out;
  int line_no = 0;
  for (std::string line : fixedform::split_lines(source)) {
    ++line_no;
    if (!line.empty() && line[0] == '*') line[0] = 'C';
    bool comment = is_comment_line(line);
    bool blank_label = line.size() >= 6 &&
                       line.find_first_not_of(' ') >= 5;
    if (!comment && blank_label && line[5] != ' ' && line[5] != '0') {
      line[5] = '&';
    }
    line = text::lower(line);
    std::string stripped = remove_whitespace(line);
    if (!comment && parameterless_subroutine(stripped)) {
      stripped.resize(stripped.size() - 2);
    }
    if (stripped.empty()) continue;
    out.push_back({line_no, std::move(stripped)});
  }
  return out;
}

std::string normalize(std::string_view source) {
  std::string out;
  for (const NormalizedLine& l : normalize_lines(source)) {
    out += l.text;
    out.push_back('\n');
  }
  return out;
}

DiffReport loose_diff(std::string_view a, std::string_view b,
                      std::string original_name, std::string regenerated_name) {
  DiffReport report;
  report.original_name = std::move(original_name);
  report.regenerated_name = std::move(regenerated_name);

  std::vector<std::string> raw_a = fixedform::split_lines(a);
  std::vector<std::string> raw_b = fixedform::split_lines(b);
  std::vector<NormalizedLine> na = normalize_lines(a);
  std::vector<NormalizedLine> nb = normalize_lines(b);

  auto start_of = [](const std::vector<NormalizedLine>& lines, std::size_t i,
                     std::size_t total) {
    if (i < lines.size()) return lines[i].line_no;
    return static_cast<int>(total) + 1;
  };

  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<Hunk> open;
  auto close = [&] {
    if (open) report.hunks.push_back(std::move(*open));
    open.reset();
  };
  for (Op op : shortest_edit(na, nb)) {
    if (op == Op::kEqual) {
      close();
      ++i;
      ++j;
      continue;
    }
    if (!open) {
      open = Hunk{i, start_of(na, i, raw_a.size()),
                  start_of(nb, j, raw_b.size()), {}, {}};
    }
    if (op == Op::kDelete) {
      open->original_lines.push_back(
          raw_a[static_cast<std::size_t>(na[i].line_no - 1)]);
      ++i;
    } else {
      open->regenerated_lines.push_back(
          raw_b[static_cast<std::size_t>(nb[j].line_no - 1)]);
      ++j;
    }
  }
  close();
  return report;
}

std::string render_unified(const DiffReport& report) {
  std::ostringstream out;
  out << "--- " << report.original_name << "\n";
  out << "+++ " << report.regenerated_name << "\n";
  for (const Hunk& h : report.hunks) {
    out << "@@ -" << h.original_start << "," << h.original_lines.size()
        << " +" << h.regenerated_start << "," << h.regenerated_lines.size()
        << " @@\n";
    for (const std::string& l : h.original_lines) out << "-" << l << "\n";
    for (const std::string& l : h.regenerated_lines) out << "+" << l << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const DiffReport& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["schema"] = kDiffSchema;
  j["file"] = report.original_name;
  j["regenerated"] = report.regenerated_name;
  j["equal"] = report.equal();
  j["hunks"] = nlohmann::ordered_json::array();
  for (const Hunk& h : report.hunks) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    o["normalized_index"] = h.normalized_index;
    o["original_start"] = h.original_start;
    o["original_lines"] = h.original_lines;
    o["regenerated_start"] = h.regenerated_start;
    o["regenerated_lines"] = h.regenerated_lines;
    j["hunks"].push_back(std::move(o));
  }
  return j;
}

DiffReport verify(const fs::path& file,
                  const std::vector<fs::path>& include_paths) {
  std::string raw =
      pipeline::staged("read", [&] { return pipeline::read_file(file); });
  std::string original = pipeline::staged("preprocess", [&] {
    return preprocess_includes(raw, include_paths, file);
  });
  std::string regenerated = pipeline::staged("island", [&] {
    std::vector<island::MarkerCollision> hits =
        island::scan_markers(original);
    if (!hits.empty()) {
      throw Error(ErrorCode::kMarkerCollision,
                  "source already contains the marker '" + hits[0].marker + "'",
                  hits[0].span);
    }
    return island::de_esopify(original).annotated_source;
  });
  ast::Ast tree = pipeline::staged(
      "parse", [&] { return parser::parse_source(regenerated).ast; });
  tree = pipeline::staged(
      "recover", [&] { return recovery::recover(std::move(tree)); });
  regenerated =
      pipeline::staged("emit", [&] { return emitter::emit_esope(tree); });
  return loose_diff(original, regenerated, file.string(),
                    file.string() + " (regenerated)");
}

}  // namespace esope::roundtrip
