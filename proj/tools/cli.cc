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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "esope/ast_json.h"
#include "esope/emitter.h"
#include "esope/parser.h"
#include "esope/pipeline.h"
#include "esope/recovery.h"
#include "esope/roundtrip.h"

namespace esope::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  std::string out;
  std::string err;
  int code = kOk;
};

std::string location(const std::string& file, const SourceSpan& span) {
  return file + ":" + std::to_string(span.start_line) + ":" +
         std::to_string(span.start_col);
}

std::string describe(const std::string& file, const Error& e) {
  std::string where = e.span() ? location(file, *e.span()) : file;
  std::string code(error_code_name(e.code()));
  if (const auto* s = dynamic_cast<const pipeline::StageError*>(&e)) {
    return where + ": " + s->stage() + ": " + code + ": " + s->detail();
  }
  return where + ": " + code + ": " + e.message();
}

void report_diagnostics(const std::string& file, const Diagnostics& diags,
                        std::ostream& err) {
  for (const Diagnostic& d : diags) {
    err << location(file, d.span) << ": warning: " << d.code << ": "
        << d.message << "\n";
  }
}

void write_output(const std::string& path, const std::string& data,
                  std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  f << data;
  if (!f) throw Error(ErrorCode::kIo, "error writing '" + path + "'");
}

// Runs one job per file concurrently and replays their output in input
// order. The exit code is the highest-priority code of any job.
int for_each_file(const std::vector<std::string>& files,
                  const std::function<Outcome(std::size_t)>& job,
                  std::ostream& out, std::ostream& err) {
  std::vector<std::future<Outcome>> pending;
  pending.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    pending.push_back(std::async(std::launch::async, job, i));
  }
  int code = kOk;
  bool failed = false;
  for (auto& p : pending) {
    Outcome o = p.get();
    out << o.out;
    err << o.err;
    failed = failed || o.code == kStageFailure;
    code = std::max(code, o.code);
  }
  return failed ? kStageFailure : code;
}

// Wraps a job so that pipeline errors become exit code 1.
std::function<Outcome(std::size_t)> guarded(
    const std::vector<std::string>& files,
    std::function<Outcome(std::size_t, const std::string&, std::ostream&,
                          std::ostream&)>
        body) {
  return [&files, body = std::move(body)](std::size_t i) {
    const std::string& file = files[i];
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    try {
      o.code = body(i, file, out, err).code;
    } catch (const Error& e) {
      err << describe(file, e) << "\n";
      o.code = kStageFailure;
    }
    o.out = out.str();
    o.err = err.str();
    return o;
  };
}

std::vector<fs::path> include_paths(const std::vector<std::string>& flags) {
  std::vector<fs::path> paths(flags.begin(), flags.end());
  if (!paths.empty()) return paths;
  const char* env = std::getenv(kIncludePathEnv);
  if (env == nullptr) return paths;
  std::string_view rest(env);
  while (!rest.empty()) {
    std::size_t colon = rest.find(':');
    std::string_view dir = rest.substr(0, colon);
    if (!dir.empty()) paths.emplace_back(std::string(dir));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return paths;
}

std::string load(const std::string& file, bool expand,
                 const std::vector<fs::path>& includes) {
  std::string raw = pipeline::staged(
      "read", [&] { return pipeline::read_file(file); });
  if (!expand) return raw;
  return pipeline::staged("preprocess", [&] {
    return roundtrip::preprocess_includes(raw, includes, file);
  });
}

std::string log_text(const island::RewriteLog& log) {
  std::ostringstream s;
  for (const island::RewriteRecord& r : log.records) {
    s << to_string(r.span) << " " << island::rule_name(r.rule) << " '"
      << r.original << "' -> '" << r.replacement << "'\n";
  }
  return s.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Json to_json(const island::RewriteLog& log, const std::string& file) {
  Json j = Json::object();
  j["schema"] = kRewriteLogSchema;
  j["file"] = file;
  j["records"] = Json::array();
  for (const island::RewriteRecord& r : log.records) {
    Json o = Json::object();
    o["rule"] = island::rule_name(r.rule);
    o["span"] = ast_json::to_json(r.span);
    o["original"] = r.original;
    o["replacement"] = r.replacement;
    j["records"].push_back(std::move(o));
  }
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Esope to Fortran-77 bridge: de-Esopify, parse, recover, "
               "regenerate and round-trip check."};
  app.name("esope-bridge");
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::vector<std::string> includes;
  std::string output;
  std::string json_output;
  std::string log_format;
  std::string report = "text";
  std::string style = "esope";
  bool expand = false;
  bool stats_json = false;

  CLI::App* markers = app.add_subcommand(
      "check-markers", "List occurrences of the rewrite markers (exit 3 if any)");
  markers->add_option("files", files, "Input files")->required();
  bool markers_json = false;
  markers->add_flag("--json", markers_json, "One JSON document per file");

  CLI::App* deesopify = app.add_subcommand(
      "deesopify", "Rewrite Esope constructs into annotated Fortran-77");
  deesopify->add_option("file", files, "Input file")->required()->expected(1);
  deesopify->add_option("-o,--output", output, "Output file");
  deesopify->add_option("--log", log_format, "Print the rewrite log")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* parse = app.add_subcommand(
      "parse", "Parse the de-Esopified file and print the AST as JSON");
  CLI::App* recover = app.add_subcommand(
      "recover", "Parse and recover Esope nodes; print the AST as JSON");
  for (CLI::App* sub : {parse, recover}) {
    sub->add_option("file", files, "Input file")->required()->expected(1);
    sub->add_flag("--expand-includes", expand, "Inline #include files first");
    sub->add_option("-I,--include", includes, "Include directory");
    sub->add_option("--json", json_output, "Write the JSON to this file");
  }

  CLI::App* regen = app.add_subcommand(
      "regen", "Run the whole pipeline and print the regenerated source");
  regen->add_option("file", files, "Input file")->required()->expected(1);
  regen->add_option("-o,--output", output, "Output file");
  regen->add_option("--style", style, "Regenerated dialect")
      ->check(CLI::IsMember({"esope", "fortran"}));

  CLI::App* rt = app.add_subcommand(
      "roundtrip", "Check that regeneration is loosely equal (exit 2 if not)");
  rt->add_option("files", files, "Input files")->required();
  rt->add_option("-I,--include", includes, "Include directory");
  rt->add_option("--report", report, "Report format")
      ->check(CLI::IsMember({"text", "json", "diff"}));

  CLI::App* stats = app.add_subcommand(
      "stats", "Per-file LOC and Esope construct counts");
  stats->add_option("files", files, "Input files")->required();
  stats->add_flag("--json", stats_json, "Print JSON instead of a table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::vector<fs::path> inc = include_paths(includes);

  if (markers->parsed()) {
    auto job = guarded(files, [&](std::size_t, const std::string& file, std::ostream& o,
                           std::ostream&) {
      std::string source = pipeline::staged(
          "read", [&] { return pipeline::read_file(file); });
      auto hits = island::scan_markers(source);
      if (markers_json) {
        Json j = Json::object();
        j["schema"] = kMarkersSchema;
        j["file"] = file;
        j["markers"] = Json::array();
        for (const island::MarkerCollision& h : hits) {
          Json m = Json::object();
          m["marker"] = h.marker;
          m["span"] = ast_json::to_json(h.span);
          j["markers"].push_back(std::move(m));
        }
        o << j.dump() << "\n";
      } else {
        for (const island::MarkerCollision& h : hits) {
          o << location(file, h.span) << ": marker '" << h.marker << "'\n";
        }
      }
      return Outcome{{}, {}, hits.empty() ? kOk : kMarkersFound};
    });
    return for_each_file(files, job, out, err);
  }

  if (deesopify->parsed()) {
    auto job = guarded(files, [&](std::size_t, const std::string& file, std::ostream& o,
                           std::ostream& e) {
      std::string source = load(file, false, inc);
      island::Result r = pipeline::staged(
          "island", [&] { return island::de_esopify(source); });
      report_diagnostics(file, r.diagnostics, e);
      write_output(output, r.annotated_source, o);
      std::ostream& log_out = output.empty() ? e : o;
      if (log_format == "json") log_out << dump(to_json(r.log, file));
      if (log_format == "text") log_out << log_text(r.log);
      return Outcome{};
    });
    return for_each_file(files, job, out, err);
  }

  if (parse->parsed() || recover->parsed()) {
    bool recovering = recover->parsed();
    auto job = guarded(files, [&](std::size_t, const std::string& file, std::ostream& o,
                           std::ostream& e) {
      std::string source = load(file, expand, inc);
      island::Result isl = pipeline::staged(
          "island", [&] { return island::de_esopify(source); });
      parser::Result parsed = pipeline::staged(
          "parse", [&] { return parser::parse_source(isl.annotated_source); });
      report_diagnostics(file, parsed.diagnostics, e);
      ast::Ast tree = std::move(parsed.ast);
      if (recovering) {
        tree = pipeline::staged(
            "recover", [&] { return recovery::recover(std::move(tree)); });
      }
      write_output(json_output, dump(ast_json::to_json(tree)), o);
      return Outcome{};
    });
    return for_each_file(files, job, out, err);
  }

  if (regen->parsed()) {
    auto job = guarded(files, [&](std::size_t, const std::string& file, std::ostream& o,
                           std::ostream& e) {
      std::string source = load(file, false, inc);
      pipeline::Run r = pipeline::run(source);
      report_diagnostics(file, r.parsed.diagnostics, e);
      std::string text = pipeline::staged("emit", [&] {
        return style == "fortran" ? emitter::emit_fortran(r.recovered)
                                  : emitter::emit_esope(r.recovered);
      });
      write_output(output, text, o);
      return Outcome{};
    });
    return for_each_file(files, job, out, err);
  }

  if (rt->parsed()) {
    auto job = guarded(files, [&](std::size_t, const std::string& file, std::ostream& o,
                           std::ostream&) {
      roundtrip::DiffReport d = roundtrip::verify(file, inc);
      if (report == "json") {
        o << roundtrip::to_json(d).dump() << "\n";
      } else if (report == "diff") {
        if (!d.equal()) o << roundtrip::render_unified(d);
      } else if (d.equal()) {
        o << file << ": equal\n";
      } else {
        o << file << ": differs (" << d.hunks.size() << " hunk"
          << (d.hunks.size() == 1 ? "" : "s") << ")\n";
      }
      return Outcome{{}, {}, d.equal() ? kOk : kRoundTripDiffers};
    });
    return for_each_file(files, job, out, err);
  }

  if (stats->parsed()) {
    std::vector<std::optional<pipeline::FileStats>> rows(files.size());
    auto job = guarded(files, [&](std::size_t i, const std::string& file,
                                  std::ostream&, std::ostream&) {
      rows[i] = pipeline::stats(load(file, false, inc));
      return Outcome{};
    });
    std::ostringstream errors;
    int code = for_each_file(files, job, out, errors);
    err << errors.str();
    if (stats_json) {
      Json j = Json::object();
      j["schema"] = kStatsSchema;
      j["files"] = Json::array();
      for (std::size_t i = 0; i < files.size(); ++i) {
        if (!rows[i]) continue;
        const recovery::EsopeCounts& c = rows[i]->counts;
        Json f = Json::object();
        f["file"] = files[i];
        f["loc"] = rows[i]->loc;
        f["segment"] = c.segments;
        f["pointer"] = c.pointers;
        f["instr"] = c.instructions;
        f["dot"] = c.dots;
        f["slash"] = c.slashes;
        j["files"].push_back(std::move(f));
      }
      out << dump(j);
      return code;
    }
    std::size_t width = 4;
    for (const std::string& f : files) width = std::max(width, f.size());
    out << std::left << std::setw(static_cast<int>(width)) << "file"
        << std::right << std::setw(6) << "LOC" << std::setw(9) << "segment"
        << std::setw(9) << "pointer" << std::setw(8) << "instr."
        << std::setw(6) << "dot" << std::setw(7) << "slash" << "\n";
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (!rows[i]) continue;
      const recovery::EsopeCounts& c = rows[i]->counts;
      out << std::left << std::setw(static_cast<int>(width)) << files[i]
          << std::right << std::setw(6) << rows[i]->loc << std::setw(9)
          << c.segments << std::setw(9) << c.pointers << std::setw(8)
          << c.instructions << std::setw(6) << c.dots << std::setw(7)
          << c.slashes << "\n";
    }
    return code;
  }
  return kUsage;
}

}  // namespace esope::cli
