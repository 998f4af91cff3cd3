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

#include <chrono>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/core.h>
#include <gtest/gtest.h>

#include "mcx/analysis/bounded.h"
#include "mcx/analysis/holes.h"
#include "mcx/analysis/triples.h"
#include "mcx/machine/gate.h"
#include "mcx/machine/machine.h"
#include "test_util.h"

namespace mcx {
namespace {

using ::mcx::testing::LoadCorpus;
using ::mcx::testing::MustParse;

using TripleShape = std::tuple<std::string, std::vector<std::string>,
                               std::vector<std::string>, std::string>;

TripleShape Shape(const CodeMatrix& m, const HoareTriple& t) {
  std::vector<std::string> guards;
  for (const auto& g : t.guards) guards.push_back(g->text);
  std::vector<std::string> statements;
  for (const auto& s : t.statements) statements.push_back(FormatAssign(s));
  return {m.locations[t.pre_location].id, guards, statements,
          m.locations[t.post_location].id};
}

TEST(TriplesTest, Primes3MatchesTheSevenProofObligations) {
  CodeMatrix m = LoadCorpus("primes3");
  std::vector<HoareTriple> triples = ExtractTriples(m);
  ASSERT_EQ(triples.size(), 7u);
  std::multiset<TripleShape> got;
  for (const auto& t : triples) got.insert(Shape(m, t));
  const std::multiset<TripleShape> want = {
      {"S", {}, {"p[0] = 2", "p[1] = 3", "k = 2"}, "A"},
      {"A", {"k >= N"}, {}, "H"},
      {"A", {"k < N"}, {"j = p[k-1]+2", "n = 0"}, "B"},
      {"B", {"p[n]*p[n] <= j"}, {}, "C"},
      {"B", {"p[n]*p[n] > j"}, {"p[k] = j", "k = k + 1"}, "A"},
      {"C", {"j % p[n+1] != 0"}, {"n = n + 1"}, "B"},
      {"C", {"j % p[n+1] == 0"}, {"j = j + 2", "n = 0"}, "C"},
  };
  EXPECT_EQ(got, want);
}

TEST(TriplesTest, OrderAndRendering) {
  CodeMatrix m = LoadCorpus("primes3");
  std::vector<HoareTriple> triples = ExtractTriples(m);
  EXPECT_EQ(RenderTriple(m, triples[0]), "{S} p[0] = 2; p[1] = 3; k = 2 {A}");
  EXPECT_EQ(RenderTriple(m, triples[1]), "{A && k >= N} {H}");
  EXPECT_EQ(RenderTriple(m, triples[5]), "{C && j % p[n+1] != 0} n = n + 1 {B}");
  for (size_t i = 1; i < triples.size(); ++i) {
    EXPECT_LE(triples[i - 1].pre_location, triples[i].pre_location);
  }
  EXPECT_EQ(triples[4].column_index, 1);
}

TEST(TriplesTest, TodoGatesAreSkipped) {
  CodeMatrix m = LoadCorpus("primes0");
  std::vector<Finding> skipped;
  EXPECT_TRUE(ExtractTriples(m, &skipped).empty());
  ASSERT_EQ(skipped.size(), 1u);
  EXPECT_EQ(skipped[0].code, "TODO-GATE");
}

TEST(TriplesTest, Minimal) {
  CodeMatrix m = LoadCorpus("minimal");
  auto triples = ExtractTriples(m);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(RenderTriple(m, triples[0]), "{S && true} {H}");
}

TEST(TriplesTest, DisjunctiveGuardsAreParenthesized) {
  CodeMatrix m = MustParse(
      "matrix t(x: int) location S location H start S halt H\n"
      "gate S -> H: when x > 1 || x < -1; when x != 5; x = 0");
  EXPECT_EQ(RenderTriple(m, ExtractTriples(m)[0]),
            "{S && (x > 1 || x < -1) && x != 5} x = 0 {H}");
}

std::vector<std::string> Codes(const std::vector<Finding>& findings) {
  std::vector<std::string> out;
  for (const auto& f : findings) out.push_back(f.code + " " + f.site);
  return out;
}

TEST(HolesTest, Corpus) {
  EXPECT_EQ(Codes(FindHoles(LoadCorpus("primes0"))),
            std::vector<std::string>{"TODO-GATE S->H"});
  for (const char* name : {"primes1", "primes2", "primes3", "gcd", "factorial",
                           "overlap", "minimal"}) {
    EXPECT_TRUE(FindHoles(LoadCorpus(name)).empty()) << name;
  }
}

TEST(HolesTest, EmptyAndUnreachable) {
  CodeMatrix m = MustParse(R"(matrix t(x: int)
location S
location A
location B
location H
start S
halt H
gate S -> A: when x > 0
gate S -> H: when x <= 0
gate B -> H: when true
)");
  EXPECT_EQ(Codes(FindHoles(m)),
            (std::vector<std::string>{"EMPTY-COLUMN A",
                                      "UNREACHABLE-LOCATION B"}));
  EXPECT_EQ(Codes(CheckFindings(m)),
            (std::vector<std::string>{"EMPTY-COLUMN A",
                                      "UNREACHABLE-LOCATION B"}));
}

TEST(HolesTest, CheckFindingsDeduplicates) {
  auto findings = CheckFindings(LoadCorpus("primes0"));
  EXPECT_EQ(Codes(findings), std::vector<std::string>{"TODO-GATE S->H"});
}

DomainSpec GcdDomain() {
  DomainSpec d;
  d.scalars["a"] = {1, 12};
  d.scalars["b"] = {1, 12};
  return d;
}

// A counterexample must be reproducible from scratch: the pre-state
// satisfies the pre-assertion and the guards, and running the gate either
// faults or lands in a state that falsifies the post-assertion.
void Revalidate(const CodeMatrix& m, const BoundedCheckReport& report) {
  FormulaEnv env = FormulaEnv::Of(m);
  for (const auto& c : report.counterexamples) {
    const HoareTriple& t = report.triples[c.triple];
    ASSERT_TRUE(EvalAssertion(m.locations[t.pre_location], c.pre_state, env));
    GateOutcome out = ApplyGate(m.gates[t.gate], c.pre_state);
    if (c.kind == CounterexampleKind::kFault) {
      EXPECT_EQ(out.status, GateStatus::kFault);
      EXPECT_EQ(out.fault, c.fault);
      continue;
    }
    ASSERT_EQ(out.status, GateStatus::kPass);
    EXPECT_EQ(out.state, c.post_state);
    bool holds = true;
    try {
      holds = EvalAssertion(m.locations[t.post_location], out.state, env);
    } catch (const FaultError&) {
      holds = false;
    }
    EXPECT_FALSE(holds);
    EXPECT_EQ(c.violated, m.locations[t.post_location].AssertionText());
  }
}

TEST(BoundedTest, GcdHasNoCounterexamples) {
  CodeMatrix m = LoadCorpus("gcd");
  BoundedCheckReport report = CheckTriplesBounded(m, GcdDomain());
  EXPECT_EQ(report.states, 12u * 12 * 12 * 12);
  EXPECT_EQ(report.per_triple.size(), 4u);
  EXPECT_TRUE(report.counterexamples.empty());
  for (const auto& s : report.per_triple) EXPECT_GT(s.pre_satisfied, 0u);
}

TEST(BoundedTest, GcdBadHasRevalidatedCounterexamples) {
  CodeMatrix m = LoadCorpus("gcd_bad");
  BoundedCheckReport report = CheckTriplesBounded(m, GcdDomain());
  ASSERT_FALSE(report.counterexamples.empty());
  uint64_t counted = 0;
  for (const auto& s : report.per_triple) counted += s.counterexamples;
  EXPECT_EQ(counted, report.counterexamples.size());
  Revalidate(m, report);
}

TEST(BoundedTest, GcdMachineAgreesWithEuclid) {
  CodeMatrix m = LoadCorpus("gcd");
  FormulaEnv env = FormulaEnv::Of(m);
  RunOptions options;
  options.verify = true;
  for (int64_t a = 1; a <= 12; ++a) {
    for (int64_t b = 1; b <= 12; ++b) {
      RunResult r = mcx::Run(m, RunInputs{{{"a", a}, {"b", b}}, {}}, options);
      ASSERT_EQ(r.outcome, Outcome::kHalted);
      EXPECT_EQ(ScalarValue(m.variables, r.final_state, "x"), std::gcd(a, b));
      EXPECT_TRUE(r.violations.empty());
      EXPECT_TRUE(EvalAssertion(m.locations[m.halt], r.final_state, env));
      // H holds for the true gcd and for no other candidate.
      for (int64_t g = 1; g <= 12; ++g) {
        DataState s = r.final_state;
        s.scalars[m.FindVariable("x")->slot] = g;
        EXPECT_EQ(EvalAssertion(m.locations[m.halt], s, env),
                  g == std::gcd(a, b));
      }
    }
  }
}

TEST(BoundedTest, Primes3SmallDomain) {
  CodeMatrix m = LoadCorpus("primes3");
  DomainSpec d;
  d.scalars = {{"N", {4, 4}}, {"k", {2, 4}}, {"j", {5, 9}}, {"n", {0, 2}}};
  d.arrays["p"] = {4, {2, 7}};
  BoundedCheckReport report = CheckTriplesBounded(m, d);
  EXPECT_EQ(report.states, 58320u);
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(BoundedTest, Primes3BadCounterexamplesRevalidate) {
  CodeMatrix m = LoadCorpus("primes3_bad");
  DomainSpec d;
  d.scalars = {{"N", {3, 3}}, {"k", {2, 3}}, {"j", {3, 6}}, {"n", {0, 1}}};
  d.arrays["p"] = {3, {2, 5}};
  BoundedCheckReport report = CheckTriplesBounded(m, d);
  ASSERT_FALSE(report.counterexamples.empty());
  Revalidate(m, report);
}

TEST(BoundedTest, FaultsAreCounterexamples) {
  CodeMatrix m = MustParse(
      "matrix t(x: int) var r: int location S location H start S halt H\n"
      "gate S -> H: r = 10 / x");
  DomainSpec d;
  d.scalars["x"] = {-1, 1};
  d.scalars["r"] = {0, 0};
  BoundedCheckReport report = CheckTriplesBounded(m, d);
  ASSERT_EQ(report.counterexamples.size(), 1u);
  EXPECT_EQ(report.counterexamples[0].kind, CounterexampleKind::kFault);
  EXPECT_EQ(report.counterexamples[0].pre_state.scalars[0], 0);
  Revalidate(m, report);
}

TEST(BoundedTest, EnumerationOrder) {
  CodeMatrix m = MustParse(
      "matrix t(y: int, a: array[int], x: int) location S location H\n"
      "start S halt H gate S -> H: when true");
  DomainSpec d;
  d.scalars = {{"x", {0, 1}}, {"y", {5, 7}}};
  d.arrays["a"] = {2, {0, 1}};
  EXPECT_EQ(CountStates(m, d), 24u);
  std::vector<DataState> seen;
  EnumerateStates(m, d, [&](const DataState& s) { seen.push_back(s); });
  ASSERT_EQ(seen.size(), 24u);
  // Slot order is declaration order: y, x.
  EXPECT_EQ(seen[0], (DataState{{5, 0}, {{0, 0}}}));
  EXPECT_EQ(seen[1], (DataState{{6, 0}, {{0, 0}}}));
  EXPECT_EQ(seen[3], (DataState{{5, 1}, {{0, 0}}}));
  EXPECT_EQ(seen[6], (DataState{{5, 0}, {{1, 0}}}));
  EXPECT_EQ(seen[12], (DataState{{5, 0}, {{0, 1}}}));
  EXPECT_EQ(seen[23], (DataState{{7, 1}, {{1, 1}}}));
  std::set<std::vector<int64_t>> distinct;
  for (const auto& s : seen) {
    auto key = s.scalars;
    key.insert(key.end(), s.arrays[0].begin(), s.arrays[0].end());
    distinct.insert(key);
  }
  EXPECT_EQ(distinct.size(), 24u);
}

TEST(BoundedTest, LocalsDefaultToHullOfScalarDomains) {
  CodeMatrix m = LoadCorpus("gcd");
  DomainSpec d;
  d.scalars = {{"a", {1, 3}}, {"b", {2, 5}}};
  EXPECT_EQ(CountStates(m, d), 3u * 4 * 5 * 5);
  // y now ranges over the hull 0..5, which includes x's range.
  d.scalars["x"] = {0, 0};
  EXPECT_EQ(CountStates(m, d), 3u * 4 * 1 * 6);
}

TEST(BoundedTest, DomainErrors) {
  CodeMatrix m = LoadCorpus("gcd");
  DomainSpec missing;
  missing.scalars["a"] = {1, 12};
  try {
    CheckTriplesBounded(m, missing);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "missing domain for variable b");
  }
  BoundedCheckOptions options;
  options.cap = 1000;
  try {
    CheckTriplesBounded(m, GcdDomain(), options);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "domain has 20736 states, exceeding the cap of 1000");
  }
  CodeMatrix p = LoadCorpus("primes3");
  DomainSpec no_array;
  no_array.scalars = {{"N", {2, 3}}};
  EXPECT_THROW(CountStates(p, no_array), DomainError);
  DomainSpec unknown = GcdDomain();
  unknown.scalars["zz"] = {0, 1};
  EXPECT_THROW(CountStates(m, unknown), DomainError);
}

TEST(BoundedTest, TripleSelectionAndReportLimit) {
  CodeMatrix m = LoadCorpus("gcd_bad");
  BoundedCheckOptions options;
  options.triples = std::vector<int>{3};
  options.max_counterexamples = 2;
  BoundedCheckReport report = CheckTriplesBounded(m, GcdDomain(), options);
  ASSERT_EQ(report.per_triple.size(), 1u);
  EXPECT_EQ(report.per_triple[0].triple, 3);
  EXPECT_GT(report.per_triple[0].counterexamples, 2u);
  EXPECT_EQ(report.counterexamples.size(), 2u);
  options.triples = std::vector<int>{9};
  EXPECT_THROW(CheckTriplesBounded(m, GcdDomain(), options), DomainError);
}

TEST(BoundedTest, Deterministic) {
  CodeMatrix m = LoadCorpus("gcd_bad");
  BoundedCheckReport a = CheckTriplesBounded(m, GcdDomain());
  BoundedCheckReport b = CheckTriplesBounded(m, GcdDomain());
  ASSERT_EQ(a.counterexamples.size(), b.counterexamples.size());
  for (size_t i = 0; i < a.counterexamples.size(); ++i) {
    EXPECT_EQ(a.counterexamples[i].pre_state, b.counterexamples[i].pre_state);
  }
}

}  // namespace
}  // namespace mcx
