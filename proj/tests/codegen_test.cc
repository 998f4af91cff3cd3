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

#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>
#include <gtest/gtest.h>

#include "mcx/analysis/holes.h"
#include "mcx/codegen/emit.h"
#include "mcx/codegen/flat.h"
#include "mcx/machine/machine.h"
#include "test_util.h"

namespace mcx {
namespace {

using ::mcx::testing::CorpusNames;
using ::mcx::testing::LoadCorpus;
using ::mcx::testing::MustParse;
using ::mcx::testing::ReadText;
using ::mcx::testing::TestdataPath;
using ::mcx::testing::TrialDivisionPrimes;

RunInputs PrimesInputs(int64_t n) { return {{{"N", n}}, {{"p", n}}}; }

TEST(LowerTest, Primes3) {
  CodeMatrix m = LoadCorpus("primes3");
  FlatProgram program = Lower(m);
  ASSERT_EQ(program.states.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(program.states[i].code, i);
    EXPECT_EQ(program.states[i].id, m.locations[i].id);
  }
  EXPECT_EQ(program.start_code, 0);
  EXPECT_EQ(program.halt_code, 4);
  EXPECT_TRUE(program.states[4].branches.empty());
  const FlatState& b = program.states[2];
  ASSERT_EQ(b.branches.size(), 2u);
  EXPECT_EQ(b.branches[0].next, 1);
  EXPECT_EQ(b.branches[0].guards[0]->text, "p[n]*p[n] > j");
  EXPECT_EQ(b.branches[0].assignments.size(), 2u);
  EXPECT_EQ(b.branches[1].next, 3);
  EXPECT_TRUE(program.states[0].branches[0].guards.empty());
}

TEST(LowerTest, RejectsTodoAndMisorderedGates) {
  try {
    Lower(LoadCorpus("primes0"));
    FAIL();
  } catch (const NotLowerableError& e) {
    EXPECT_EQ(e.finding().code, "TODO-GATE");
  }
  try {
    Lower(MustParse("matrix t(x: int) location S location H start S halt H\n"
                    "gate S -> H: x = 1; when x > 0"));
    FAIL();
  } catch (const NotLowerableError& e) {
    EXPECT_EQ(e.finding().code, "GUARDS-FIRST-VIOLATION");
  }
}

TEST(LowerTest, LowerabilityAgreesWithCheck) {
  std::vector<std::string> sources;
  for (const auto& name : CorpusNames()) {
    sources.push_back(ReadText(testing::CorpusPath(name)));
  }
  sources.push_back(
      "matrix t(x: int) location S location A location H start S halt H\n"
      "gate S -> A: x = 1; when x > 0\ngate A -> S: when true");
  sources.push_back(
      "matrix t() location S location A location B location H start S "
      "halt H\ngate S -> A: when true\ngate H -> S: when true");
  for (const auto& text : sources) {
    CodeMatrix m = MustParse(text);
    bool blocking = false;
    for (const auto& f : CheckFindings(m)) {
      blocking |= f.code == "TODO-GATE" || f.code == "GUARDS-FIRST-VIOLATION";
    }
    bool lowered = true;
    try {
      Lower(m);
    } catch (const NotLowerableError&) {
      lowered = false;
    }
    EXPECT_EQ(lowered, !blocking) << text;
  }
}

TEST(RunFlatTest, Primes3MatchesMachineForAllSmallN) {
  CodeMatrix m = LoadCorpus("primes3");
  FlatProgram program = Lower(m);
  for (int n = 2; n <= 50; ++n) {
    RunResult a = mcx::Run(m, PrimesInputs(n), {});
    RunResult b = RunFlat(program, PrimesInputs(n), {});
    EXPECT_EQ(a.outcome, b.outcome) << n;
    EXPECT_EQ(a.final_state, b.final_state) << n;
    EXPECT_EQ(a.cycles, b.cycles) << n;
    EXPECT_EQ(a, b) << n;
  }
  RunResult ten = RunFlat(program, PrimesInputs(10), {});
  EXPECT_EQ(ArrayValue(program.variables, ten.final_state, "p"),
            TrialDivisionPrimes(10));
}

TEST(RunFlatTest, BlockedAndFaultOutcomesMatch) {
  for (const char* name : {"primes1", "primes2"}) {
    CodeMatrix m = LoadCorpus(name);
    EXPECT_EQ(mcx::Run(m, PrimesInputs(3), {}),
              RunFlat(Lower(m), PrimesInputs(3), {}))
        << name;
  }
  CodeMatrix f = LoadCorpus("factorial");
  RunInputs in{{{"n", 30}}, {}};
  RunResult a = mcx::Run(f, in, {});
  EXPECT_EQ(a.outcome, Outcome::kFault);
  EXPECT_EQ(a, RunFlat(Lower(f), in, {}));
}

// Random parameter values across every lowerable corpus matrix, with
// tracing, verification and probing on so the whole result is compared.
TEST(RunFlatTest, DifferentialOnRandomInputs) {
  const uint32_t seed = std::random_device{}();
  std::cout << "differential seed " << seed << "\n";
  std::mt19937 rng(seed);
  std::vector<CodeMatrix> matrices;
  for (const auto& name : CorpusNames()) {
    if (name != "primes0") matrices.push_back(LoadCorpus(name));
  }
  RunOptions options;
  options.trace = true;
  options.verify = true;
  options.probe_nondeterminism = true;
  options.max_steps = 20000;
  int runs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const CodeMatrix& m = matrices[rng() % matrices.size()];
    DataState initial;
    for (int i = 0; i < m.ScalarCount(); ++i) {
      initial.scalars.push_back(
          std::uniform_int_distribution<int64_t>(-3, 40)(rng));
    }
    for (int i = 0; i < m.ArrayCount(); ++i) {
      initial.arrays.emplace_back(
          std::uniform_int_distribution<size_t>(0, 40)(rng), 0);
    }
    RunResult a = mcx::Run(m, initial, options);
    RunResult b = RunFlat(Lower(m), initial, options);
    EXPECT_EQ(a, b) << "seed " << seed << " trial " << trial << " matrix "
                    << m.name;
    ++runs;
  }
  EXPECT_GE(runs, 100);
}

TEST(EmitTest, Primes3Golden) {
  EmitOptions options;
  options.function_name = "primesCM";
  std::string code = EmitSwitch(Lower(LoadCorpus("primes3")), options);
  EXPECT_EQ(code, ReadText(TestdataPath("primes3_emit.java")));
  EXPECT_NE(code.find("final int S=0, A=1, B=2, C=3, H=4;"), std::string::npos);
  EXPECT_NE(code.find("case B: if (p[n]*p[n] > j)"), std::string::npos);
  EXPECT_NE(code.find("case H: return;"), std::string::npos);
}

TEST(EmitTest, DefaultNameAndIndent) {
  EmitOptions options;
  options.indent = 4;
  std::string code = EmitSwitch(Lower(LoadCorpus("minimal")), options);
  EXPECT_EQ(code,
            "public static void t() {\n"
            "    final int S=0, H=1;\n"
            "    int state=S;\n"
            "    while (true) {\n"
            "        switch (state) {\n"
            "            case S: if (true) { state = H; } else { throw new "
            "IllegalStateException(\"blocked in state S\"); } break;\n"
            "            case H: return;\n"
            "    } } }\n");
}

TEST(EmitTest, ChainsAndTraps) {
  CodeMatrix m = MustParse(R"(matrix t(x: int)
var y: int
location S
location A
location B
location E
location H
start S
halt H
gate S -> A: when x > 0
gate S -> B: when x < 0
gate S -> H: y = 1
gate A -> H: when !(x == 3)
gate A -> B: when x == 3; y = 2
gate B -> H: when x == 1 && y == 0; when x > 0 || x < -5
gate B -> H: when x == 1
)");
  std::string code = EmitSwitch(Lower(m));
  EXPECT_NE(code.find("case S: if (x > 0) { state = A; } else if (x < 0) { "
                      "state = B; } else { y = 1; state = H; } break;"),
            std::string::npos)
      << code;
  EXPECT_NE(code.find("case A: if (!(x == 3)) { state = H; } else { y = 2; "
                      "state = B; } break;"),
            std::string::npos)
      << code;
  EXPECT_NE(code.find("case B: if (x == 1 && y == 0 && (x > 0 || x < -5)) { "
                      "state = H; } else if (x == 1) { state = H; } else { "
                      "throw new IllegalStateException(\"blocked in state "
                      "B\"); } break;"),
            std::string::npos)
      << code;
  EXPECT_NE(code.find("case E: throw new IllegalStateException(\"blocked in "
                      "state E\");\n"),
            std::string::npos)
      << code;
  EXPECT_NE(code.find("int y=0;"), std::string::npos);
}

const Expr& Guard(const CodeMatrix& m, int gate) {
  return *std::get<GuardStep>(m.gates[gate].steps[0]).condition;
}

TEST(EmitTest, Complements) {
  CodeMatrix m = MustParse(R"(matrix t(x: int, y: int)
location S
location H
start S
halt H
gate S -> H: when x < y
gate S -> H: when x >= y
gate S -> H: when (x < y)
gate S -> H: when !(x < y)
gate S -> H: when y > x
gate S -> H: when x == y + 1
gate S -> H: when x != y+1
gate S -> H: when x <= y
)");
  EXPECT_TRUE(IsComplement(Guard(m, 0), Guard(m, 1)));
  EXPECT_TRUE(IsComplement(Guard(m, 1), Guard(m, 0)));
  EXPECT_TRUE(IsComplement(Guard(m, 2), Guard(m, 1)));
  EXPECT_TRUE(IsComplement(Guard(m, 3), Guard(m, 0)));
  EXPECT_TRUE(IsComplement(Guard(m, 0), Guard(m, 3)));
  EXPECT_FALSE(IsComplement(Guard(m, 4), Guard(m, 1)));
  EXPECT_TRUE(IsComplement(Guard(m, 5), Guard(m, 6)));
  EXPECT_FALSE(IsComplement(Guard(m, 0), Guard(m, 7)));
  EXPECT_FALSE(IsComplement(Guard(m, 0), Guard(m, 0)));
}

}  // namespace
}  // namespace mcx
