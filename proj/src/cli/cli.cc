// Copyright 2026 The mcx Authors
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

#include "mcx/cli/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "mcx/analysis/bounded.h"
#include "mcx/analysis/holes.h"
#include "mcx/analysis/triples.h"
#include "mcx/codegen/emit.h"
#include "mcx/codegen/flat.h"
#include "mcx/machine/machine.h"
#include "mcx/machine/trace.h"
#include "mcx/syntax/parser.h"
#include "mcx/syntax/render.h"
#include "mcx/syntax/validate.h"

namespace mcx::cli {
namespace {

// Thrown for bad flag values and unreadable files; maps to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int64_t ParseInt(std::string_view text, std::string_view what) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(fmt::format("invalid integer '{}' in {}", text, what));
  }
  return value;
}

std::pair<std::string, std::string_view> SplitBinding(std::string_view flag,
                                                      std::string_view text) {
  size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw UsageError(fmt::format("{} expects NAME=VALUE, got '{}'", flag, text));
  }
  return {std::string(text.substr(0, eq)), text.substr(eq + 1)};
}

IntRange ParseRange(std::string_view text, std::string_view what) {
  size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw UsageError(fmt::format("{} expects LO..HI, got '{}'", what, text));
  }
  IntRange range{ParseInt(text.substr(0, dots), what),
                 ParseInt(text.substr(dots + 2), what)};
  if (range.lo > range.hi) {
    throw UsageError(fmt::format("empty range '{}' in {}", text, what));
  }
  return range;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("IO {}: cannot open file", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Prints parse errors and returns nullopt when the file does not parse.
std::optional<CodeMatrix> Load(const std::string& path, std::ostream& err) {
  ParseResult result = ParseMatrix(ReadFile(path));
  for (const auto& e : result.errors) {
    fmt::print(err, "error PARSE {}:{}\n", path, e.ToString());
  }
  return std::move(result.matrix);
}

struct RunFlags {
  std::vector<std::string> args;
  std::vector<std::string> lens;
  bool verify = false;
  bool probe = false;
  bool trace = false;
  uint64_t max_steps = 1'000'000;
  size_t array_elems = kDefaultArrayElems;
};

struct VerifyFlags {
  std::vector<std::string> domains;
  std::vector<std::string> lens;
  std::vector<std::string> elems;
  uint64_t cap = 10'000'000;
  std::vector<int> triples;
  size_t max_report = 10;
};

int Check(const std::string& file, std::ostream& out, std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;
  bool error = false;
  auto findings = CheckFindings(*matrix);
  for (const auto& f : findings) {
    fmt::print(out, "{}\n", f.ToString());
    error |= f.severity == Severity::kError;
  }
  if (error) return kUsage;
  return findings.empty() ? kOk : kWarnings;
}

int RunCommand(const std::string& file, const RunFlags& flags,
               std::ostream& out, std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;

  RunInputs inputs;
  for (const auto& a : flags.args) {
    auto [name, value] = SplitBinding("--arg", a);
    inputs.scalars[name] = ParseInt(value, "--arg " + name);
  }
  for (const auto& l : flags.lens) {
    auto [name, value] = SplitBinding("--len", l);
    inputs.lengths[name] = ParseInt(value, "--len " + name);
  }

  RunOptions options;
  options.verify = flags.verify;
  options.probe_nondeterminism = flags.probe;
  options.max_steps = flags.max_steps;
  if (flags.trace) {
    options.trace_sink = [&](const TraceEntry& entry) {
      out << FormatTraceLine(matrix->variables, matrix->locations, entry,
                             flags.array_elems)
          << '\n';
    };
  }

  RunResult result;
  try {
    result = Run(*matrix, inputs, options);
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error ARGS {}\n", e.what());
    return kUsage;
  }

  const std::string& where = matrix->locations[result.location].id;
  std::string scalars = FormatScalars(matrix->variables, result.final_state);
  fmt::print(out, "outcome={} cycles={}{}{}\n", OutcomeName(result.outcome),
             result.cycles, scalars.empty() ? "" : " ", scalars);
  switch (result.outcome) {
    case Outcome::kHalted: break;
    case Outcome::kBlocked:
      fmt::print(out, "blocked at {}: no gate passes\n", where);
      break;
    case Outcome::kFault:
      fmt::print(out, "fault at {}: {}\n", where, result.fault->ToString());
      break;
    case Outcome::kStepLimit:
      fmt::print(out, "step limit {} reached at {}\n", flags.max_steps, where);
      break;
  }
  for (const auto& v : result.violations) {
    fmt::print(out, "violation #{} {}: {}{}\n", v.cycle,
               matrix->locations[v.location].id, v.assertion,
               v.detail.empty() ? "" : " (" + v.detail + ")");
  }
  for (const auto& o : result.overlaps) {
    fmt::print(out, "overlap #{} {}: {} taken, {} also passes\n", o.cycle,
               matrix->locations[o.location].id,
               GateSite(*matrix, matrix->gates[o.selected_gate]),
               GateSite(*matrix, matrix->gates[o.other_gate]));
  }

  switch (result.outcome) {
    case Outcome::kHalted:
      return result.violations.empty() && result.overlaps.empty() ? kOk
                                                                  : kFindings;
    case Outcome::kBlocked: return kBlocked;
    case Outcome::kFault: return kFault;
    case Outcome::kStepLimit: return kStepLimit;
  }
  return kUsage;
}

int Triples(const std::string& file, std::ostream& out, std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;
  fmt::print(out, "Assertions:\n");
  for (const auto& loc : matrix->locations) {
    fmt::print(out, "{}: {}\n", loc.id, loc.AssertionText());
  }
  fmt::print(out, "\nHoare triples:\n");
  for (const auto& t : ExtractTriples(*matrix)) {
    fmt::print(out, "{}\n", RenderTriple(*matrix, t));
  }
  return kOk;
}

DomainSpec BuildDomains(const VerifyFlags& flags) {
  DomainSpec spec;
  for (const auto& d : flags.domains) {
    auto [name, value] = SplitBinding("--domain", d);
    spec.scalars[name] = ParseRange(value, "--domain " + name);
  }
  std::map<std::string, IntRange, std::less<>> elems;
  for (const auto& e : flags.elems) {
    auto [name, value] = SplitBinding("--elem", e);
    elems[name] = ParseRange(value, "--elem " + name);
  }
  for (const auto& l : flags.lens) {
    auto [name, value] = SplitBinding("--len", l);
    ArrayDomain domain;
    domain.length = ParseInt(value, "--len " + name);
    auto it = elems.find(name);
    if (it != elems.end()) {
      domain.elements = it->second;
      elems.erase(it);
    } else if (domain.length > 0) {
      throw DomainError(
          fmt::format("missing --elem range for array {}", name));
    }
    spec.arrays[name] = domain;
  }
  if (!elems.empty()) {
    throw DomainError(fmt::format("missing --len for array {}",
                                  elems.begin()->first));
  }
  return spec;
}

int Verify(const std::string& file, const VerifyFlags& flags,
           std::ostream& out, std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;

  BoundedCheckOptions options;
  options.cap = flags.cap;
  options.max_counterexamples = flags.max_report;
  if (!flags.triples.empty()) options.triples = flags.triples;

  BoundedCheckReport report;
  try {
    report = CheckTriplesBounded(*matrix, BuildDomains(flags), options);
  } catch (const DomainError& e) {
    fmt::print(err, "error DOMAIN {}\n", e.what());
    return kUsage;
  }

  uint64_t total = 0;
  fmt::print(out, "states: {}\n", report.states);
  fmt::print(out, "triples checked: {}\n", report.per_triple.size());
  for (const auto& s : report.per_triple) {
    fmt::print(out, "  [{}] {}: pre held {}, counterexamples {}\n", s.triple,
               RenderTriple(*matrix, report.triples[s.triple]),
               s.pre_satisfied, s.counterexamples);
    total += s.counterexamples;
  }
  fmt::print(out, "counterexamples: {}\n", total);
  for (const auto& c : report.counterexamples) {
    fmt::print(out, "\ncounterexample for [{}] {}\n", c.triple,
               RenderTriple(*matrix, report.triples[c.triple]));
    fmt::print(out, "  pre:  {}\n",
               FormatState(matrix->variables, c.pre_state));
    if (c.kind == CounterexampleKind::kFault) {
      fmt::print(out, "  fault: {}\n", c.fault->ToString());
      continue;
    }
    fmt::print(out, "  post: {}\n",
               FormatState(matrix->variables, c.post_state));
    fmt::print(out, "  violated: {}{}\n", c.violated,
               c.fault ? " (" + c.fault->ToString() + ")" : "");
  }
  return total == 0 ? kOk : kFindings;
}

int Emit(const std::string& file, const std::string& name, std::ostream& out,
         std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;
  try {
    EmitOptions options;
    options.function_name = name;
    out << EmitSwitch(Lower(*matrix), options);
  } catch (const NotLowerableError& e) {
    fmt::print(err, "error {}\n", e.what());
    return kUsage;
  }
  return kOk;
}

int Show(const std::string& file, std::ostream& out, std::ostream& err) {
  auto matrix = Load(file, err);
  if (!matrix) return kUsage;
  out << RenderMatrix(*matrix);
  return kOk;
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Matrix Code toolkit", "mcx"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "matrix file (.mcx)")->required();
  };

  CLI::App* check = app.add_subcommand("check", "report parse errors and holes");
  add_file(check);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "execute the matrix");
  add_file(run);
  run->add_option("--arg", run_flags.args, "scalar parameter NAME=INT")
      ->allow_extra_args(false);
  run->add_option("--len", run_flags.lens, "array parameter length NAME=INT")
      ->allow_extra_args(false);
  run->add_flag("--verify", run_flags.verify, "check assertions every cycle");
  run->add_flag("--probe", run_flags.probe, "report overlapping gates");
  run->add_flag("--trace", run_flags.trace, "print one line per cycle");
  run->add_option("--max-steps", run_flags.max_steps, "cycle limit");
  run->add_option("--array-elems", run_flags.array_elems,
                  "array elements shown per trace line");

  CLI::App* triples = app.add_subcommand("triples", "list Hoare triples");
  add_file(triples);

  VerifyFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "bounded triple checking");
  add_file(verify);
  verify->add_option("--domain", verify_flags.domains, "scalar NAME=LO..HI")
      ->allow_extra_args(false);
  verify->add_option("--len", verify_flags.lens, "array length NAME=INT")
      ->allow_extra_args(false);
  verify->add_option("--elem", verify_flags.elems, "array elements NAME=LO..HI")
      ->allow_extra_args(false);
  verify->add_option("--cap", verify_flags.cap, "largest domain to enumerate");
  verify->add_option("--triple", verify_flags.triples, "triple index to check")
      ->allow_extra_args(false);
  verify->add_option("--max-report", verify_flags.max_report,
                     "counterexamples printed per triple");

  std::string emit_name;
  CLI::App* emit = app.add_subcommand("emit", "print the switch translation");
  add_file(emit);
  emit->add_option("--name", emit_name, "function name");

  CLI::App* show = app.add_subcommand("show", "draw the matrix grid");
  add_file(show);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error USAGE {}\n", e.what());
    return kUsage;
  }

  try {
    if (check->parsed()) return Check(file, out, err);
    if (run->parsed()) return RunCommand(file, run_flags, out, err);
    if (triples->parsed()) return Triples(file, out, err);
    if (verify->parsed()) return Verify(file, verify_flags, out, err);
    if (emit->parsed()) return Emit(file, emit_name, out, err);
    if (show->parsed()) return Show(file, out, err);
  } catch (const UsageError& e) {
    fmt::print(err, "error {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace mcx::cli
