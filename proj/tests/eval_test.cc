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

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include <fmt/core.h>
#include <gtest/gtest.h>

#include "mcx/machine/eval.h"
#include "mcx/syntax/ast.h"
#include "test_util.h"

namespace mcx {
namespace {

using ::mcx::testing::MustParse;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

// Wraps `formula` and `value` in a matrix over x, y and array a so they
// can be evaluated against a DataState {x, y, r} / {a}.
class EvalTest : public ::testing::Test {
 protected:
  CodeMatrix Build(const std::string& formula, const std::string& value,
                   const std::string& preds = "") {
    return MustParse(fmt::format(
        "matrix e(x: int, y: int, a: array[int]) var r: int\n{}\n"
        "location S: assert {}\nlocation H start S halt H\n"
        "gate S -> H: r = {}",
        preds, formula, value));
  }

  int64_t Int(const std::string& value) {
    CodeMatrix m = Build("true", value);
    return EvalInt(*std::get<AssignStep>(m.gates[0].steps[0]).value, state_);
  }

  bool Formula(const std::string& formula, const std::string& preds = "") {
    CodeMatrix m = Build(formula, "0", preds);
    return EvalAssertion(m.locations[0], state_, FormulaEnv::Of(m));
  }

  FaultKind IntFault(const std::string& value) {
    try {
      Int(value);
    } catch (const FaultError& e) {
      return e.fault().kind;
    }
    ADD_FAILURE() << value << " did not fault";
    return FaultKind::kOverflow;
  }

  DataState state_{{7, -3, 0}, {{5, 1, 4}}};
};

TEST_F(EvalTest, Arithmetic) {
  EXPECT_EQ(Int("1 + 2 * 3"), 7);
  EXPECT_EQ(Int("(1 + 2) * 3"), 9);
  EXPECT_EQ(Int("x - y - 1"), 9);
  EXPECT_EQ(Int("-x * 2"), -14);
  EXPECT_EQ(Int("a[1] + a[x - 5]"), 5);
  EXPECT_EQ(Int("len(a)"), 3);
}

TEST_F(EvalTest, DivisionTruncatesTowardZero) {
  EXPECT_EQ(Int("x / y"), -2);
  EXPECT_EQ(Int("x % y"), 1);
  EXPECT_EQ(Int("-x / 2"), -3);
  EXPECT_EQ(Int("-x % 2"), -1);
  EXPECT_EQ(Int("y % x"), -3);
}

TEST_F(EvalTest, Faults) {
  EXPECT_EQ(IntFault("x / (y + 3)"), FaultKind::kDivByZero);
  EXPECT_EQ(IntFault("x % 0"), FaultKind::kDivByZero);
  EXPECT_EQ(IntFault("a[3]"), FaultKind::kIndexOutOfBounds);
  EXPECT_EQ(IntFault("a[-1]"), FaultKind::kIndexOutOfBounds);
  EXPECT_EQ(IntFault("9223372036854775807 + 1"), FaultKind::kOverflow);
  EXPECT_EQ(IntFault("-9223372036854775807 - 2"), FaultKind::kOverflow);
  EXPECT_EQ(IntFault("4611686018427387904 * 2"), FaultKind::kOverflow);
}

TEST_F(EvalTest, FaultText) {
  try {
    Int("a[x]");
    FAIL();
  } catch (const FaultError& e) {
    EXPECT_EQ(e.fault().ToString(),
              "index-out-of-bounds: a[7] with length 3 in 'a[x]'");
  }
}

TEST_F(EvalTest, ShortCircuit) {
  EXPECT_FALSE(Formula("x < 0 && x / 0 == 1"));
  EXPECT_TRUE(Formula("x > 0 || a[99] == 1"));
  EXPECT_THROW(Formula("x > 0 && a[99] == 1"), FaultError);
}

TEST_F(EvalTest, Comparisons) {
  EXPECT_TRUE(Formula("x == 7 && y != 7 && y < x && x <= 7 && x >= 7"));
  EXPECT_TRUE(Formula("(x > y) == true"));
  EXPECT_TRUE(Formula("(x < y) != (x > y)"));
  EXPECT_TRUE(Formula("!(x < y)"));
}

TEST_F(EvalTest, Quantifiers) {
  EXPECT_TRUE(Formula("forall i in 0..len(a)-1: a[i] > 0"));
  EXPECT_FALSE(Formula("forall i in 0..len(a)-1: a[i] > 1"));
  EXPECT_TRUE(Formula("exists i in 0..2: a[i] == 4"));
  EXPECT_FALSE(Formula("exists i in 0..2: a[i] == 3"));
  EXPECT_TRUE(Formula("forall i in 0..2: exists j in 0..2: a[j] >= a[i]"));
  EXPECT_TRUE(Formula("forall i in 5..4: false"));
  EXPECT_FALSE(Formula("exists i in 5..4: true"));
  EXPECT_TRUE(Formula("forall i in 1..1: i == 1"));
}

TEST_F(EvalTest, QuantifierRangeLimit) {
  try {
    Formula("forall i in 0..100000000: i >= 0");
    FAIL();
  } catch (const FaultError& e) {
    EXPECT_EQ(e.fault().kind, FaultKind::kUnboundedRange);
  }
  EXPECT_TRUE(Formula("forall i in -9223372036854775807-1..-9223372036854775807: i < 0"));
}

TEST_F(EvalTest, Predicates) {
  const std::string preds =
      "pred isPrime(m: int) := m >= 2 && (forall d in 2..m-1: m % d != 0)\n"
      "pred allPrime(q: array[int], n: int) := forall i in 0..n-1: isPrime(q[i])";
  EXPECT_TRUE(Formula("isPrime(x) && !isPrime(a[2])", preds));
  EXPECT_FALSE(Formula("allPrime(a, 3)", preds));
  EXPECT_TRUE(Formula("allPrime(a, 1)", preds));
  EXPECT_TRUE(Formula("forall i in 0..0: allPrime(a, i + 1)", preds));
}

TEST_F(EvalTest, Inclusion) {
  CodeMatrix m = MustParse(
      "matrix e(x: int) location S: assert x > 0\n"
      "location A: assert @S && x < 10\nlocation H: assert @A\n"
      "start S halt H gate S -> H: when true");
  FormulaEnv env = FormulaEnv::Of(m);
  EXPECT_TRUE(EvalAssertion(m.locations[2], {{5}, {}}, env));
  EXPECT_FALSE(EvalAssertion(m.locations[2], {{0}, {}}, env));
  EXPECT_FALSE(EvalAssertion(m.locations[2], {{10}, {}}, env));
}

TEST_F(EvalTest, EvalExprTypes) {
  CodeMatrix m = Build("x > 1", "x * 2");
  EXPECT_EQ(std::get<int64_t>(EvalExpr(
                *std::get<AssignStep>(m.gates[0].steps[0]).value, state_)),
            14);
  EXPECT_EQ(std::get<bool>(EvalExpr(*m.locations[0].assertion, state_,
                                    FormulaEnv::Of(m))),
            true);
}

// Binary operators on random operands against 128-bit reference results.
TEST_F(EvalTest, RandomBinaryOpsMatchWideArithmetic) {
  const uint32_t seed = std::random_device{}();
  std::cout << "arithmetic seed " << seed << "\n";
  std::mt19937_64 rng(seed);
  const int64_t interesting[] = {0, 1, -1, 2, -2, kMin, kMax, kMin + 1,
                                 kMax - 1, 3037000499, -3037000500};
  CodeMatrix m = MustParse(
      "matrix e(x: int, y: int) var r: int location S location H start S "
      "halt H\ngate S -> H: r = x + y; r = x - y; r = x * y; r = x / y; "
      "r = x % y");
  auto pick = [&]() -> int64_t {
    switch (rng() % 3) {
      case 0: return interesting[rng() % std::size(interesting)];
      case 1: return static_cast<int64_t>(rng() % 2001) - 1000;
      default: return static_cast<int64_t>(rng());
    }
  };
  for (int trial = 0; trial < 20000; ++trial) {
    int64_t x = pick();
    int64_t y = pick();
    DataState s{{x, y, 0}, {}};
    for (int op = 0; op < 5; ++op) {
      const Expr& e = *std::get<AssignStep>(m.gates[0].steps[op]).value;
      __int128 wx = x;
      __int128 wy = y;
      __int128 want = 0;
      bool div_zero = (op == 3 || op == 4) && y == 0;
      if (!div_zero) {
        switch (op) {
          case 0: want = wx + wy; break;
          case 1: want = wx - wy; break;
          case 2: want = wx * wy; break;
          case 3: want = wx / wy; break;
          case 4: want = wx % wy; break;
        }
      }
      bool overflow = !div_zero && (want < kMin || want > kMax ||
                                    (op == 4 && x == kMin && y == -1));
      SCOPED_TRACE(fmt::format("seed {} x={} y={} op={}", seed, x, y, op));
      if (div_zero || overflow) {
        try {
          EvalInt(e, s);
          ADD_FAILURE() << "expected a fault";
        } catch (const FaultError& err) {
          EXPECT_EQ(err.fault().kind,
                    div_zero ? FaultKind::kDivByZero : FaultKind::kOverflow);
        }
      } else {
        EXPECT_EQ(EvalInt(e, s), static_cast<int64_t>(want));
      }
    }
  }
}

}  // namespace
}  // namespace mcx
