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

#include "support/properties.h"

#include <functional>
#include <optional>
#include <sstream>

#include "dot_oracle.h"
#include "esope/ast.h"
#include "esope/ast_json.h"
#include "esope/emitter.h"
#include "esope/fixedform.h"
#include "esope/island.h"
#include "esope/parser.h"
#include "esope/pipeline.h"
#include "esope/recovery.h"
#include "esope/roundtrip.h"
#include "esope/text.h"
#include "support/generators.h"

namespace props {

namespace {

using esope::Error;
using Check = std::function<std::optional<std::string>(gen::Rng&, std::string&)>;

// Each case gets its own seed so a failure can be replayed alone. `input`
// is filled by the check and quoted on failure.
PropertyResult run(const std::string& name, int cases, std::uint32_t seed,
                   const Check& check) {
  PropertyResult r{name, 0, 0, {}};
  for (int i = 0; i < cases; ++i) {
    std::uint32_t case_seed = seed * 1000003u + static_cast<std::uint32_t>(i);
    gen::Rng rng(case_seed);
    std::string input;
    std::optional<std::string> failure;
    try {
      failure = check(rng, input);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (failure) {
      if (r.failures++ == 0) {
        std::ostringstream os;
        os << "seed " << case_seed << ": " << *failure << "\n--- input ---\n"
           << input;
        r.first_failure = os.str();
      }
    }
  }
  return r;
}

std::optional<std::string> diff_message(const esope::roundtrip::DiffReport& d) {
  if (d.equal()) return std::nullopt;
  return "texts differ\n" + esope::roundtrip::render_unified(d);
}

}  // namespace

PropertyResult deesopify_identity(int cases, std::uint32_t seed) {
  return run("deesopify_identity", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::fortran_source(rng, {});
               auto r = esope::island::de_esopify(input);
               if (r.annotated_source != input) return "output differs from input";
               if (!r.log.records.empty()) {
                 return std::to_string(r.log.records.size()) + " rewrite records";
               }
               return std::nullopt;
             });
}

PropertyResult deesopify_idempotent(int cases, std::uint32_t seed) {
  return run("deesopify_idempotent", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::fortran_source(rng, {.esope = true});
               auto once = esope::island::de_esopify(input);
               auto twice = esope::island::de_esopify(once.annotated_source);
               if (twice.annotated_source != once.annotated_source) {
                 return "second pass changed the text\n" +
                        esope::roundtrip::render_unified(esope::roundtrip::loose_diff(
                            once.annotated_source, twice.annotated_source));
               }
               if (!twice.log.records.empty()) return "second pass logged rewrites";
               return std::nullopt;
             });
}

PropertyResult normalize_idempotent(int cases, std::uint32_t seed) {
  return run("normalize_idempotent", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::loose_text(rng);
               std::string once = esope::roundtrip::normalize(input);
               std::string twice = esope::roundtrip::normalize(once);
               if (once != twice) return "once:\n" + once + "twice:\n" + twice;
               return std::nullopt;
             });
}

PropertyResult json_roundtrip(int cases, std::uint32_t seed) {
  namespace aj = esope::ast_json;
  return run("json_roundtrip", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               esope::ast::Ast tree = gen::random_ast(rng);
               aj::Json doc = aj::to_json(tree);
               input = doc.dump(1);
               esope::ast::Ast back = aj::from_json(aj::Json::parse(doc.dump()));
               if (!(back == tree)) return "tree differs after from_json";
               if (aj::to_json(back).dump() != doc.dump()) {
                 return "re-serialized text differs";
               }
               return std::nullopt;
             });
}

PropertyResult render_assemble(int cases, std::uint32_t seed) {
  namespace ff = esope::fixedform;
  return run("render_assemble", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::statement_text(rng);
               std::optional<int> label;
               if (std::bernoulli_distribution(0.3)(rng)) {
                 label = std::uniform_int_distribution<int>(1, 99999)(rng);
               }
               int indent = std::uniform_int_distribution<int>(0, 12)(rng);
               std::vector<std::string> lines = ff::render_statement(input, label, indent);
               std::string joined;
               for (const std::string& l : lines) {
                 if (l.size() > 72) return "line longer than 72 columns: " + l;
                 joined += l + "\n";
               }
               auto units = ff::assemble(ff::classify_source(joined));
               if (units.size() != 1) return "expected one unit, got " + std::to_string(units.size());
               const auto* stmt = std::get_if<ff::LogicalStatement>(&units[0]);
               if (stmt == nullptr) return std::string("not a statement");
               if (stmt->label != label) return std::string("label lost");
               if (esope::text::strip_blanks(stmt->text) != esope::text::strip_blanks(input)) {
                 return "text differs: " + stmt->text;
               }
               return std::nullopt;
             });
}

PropertyResult pipeline_roundtrip(int cases, std::uint32_t seed) {
  return run("pipeline_roundtrip", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::fortran_source(rng, {.esope = true, .continuations = false});
               auto r = esope::pipeline::run(input);
               std::string regenerated = esope::emitter::emit_esope(r.recovered);
               return diff_message(esope::roundtrip::loose_diff(input, regenerated));
             });
}

PropertyResult fortran_emit_stable(int cases, std::uint32_t seed) {
  return run("fortran_emit_stable", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::fortran_source(rng, {.esope = true});
               auto first = esope::pipeline::run(input);
               std::string annotated = esope::emitter::emit_fortran(first.recovered);
               auto reparsed = esope::parser::parse_source(annotated);
               auto again = esope::recovery::recover(reparsed.ast);
               if (!(esope::ast::without_spans(again) ==
                     esope::ast::without_spans(first.recovered))) {
                 return "tree differs after emit_fortran/parse\n" + annotated;
               }
               return std::nullopt;
             });
}

PropertyResult dot_count_oracle(int cases, std::uint32_t seed) {
  return run("dot_count_oracle", cases, seed,
             [](gen::Rng& rng, std::string& input) -> std::optional<std::string> {
               input = gen::fortran_source(rng, {.esope = true});
               auto r = esope::island::de_esopify(input);
               std::size_t island = r.log.count(esope::island::Rule::kDotNotation);
               std::size_t expected = oracle::count_access_dots(input);
               if (island != expected) {
                 return "island " + std::to_string(island) + ", oracle " +
                        std::to_string(expected);
               }
               return std::nullopt;
             });
}

std::vector<PropertyResult> all(int cases) {
  return {deesopify_identity(cases),  deesopify_idempotent(cases),
          normalize_idempotent(cases), json_roundtrip(cases),
          render_assemble(cases),      pipeline_roundtrip(cases),
          fortran_emit_stable(cases),  dot_count_oracle(cases)};
}

}  // namespace props
