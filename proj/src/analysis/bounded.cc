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

#include "mcx/analysis/bounded.h"

#include <algorithm>

#include <fmt/core.h>

#include "mcx/machine/gate.h"

namespace mcx {
namespace {

// One odometer wheel: a scalar, or one element of an array.
struct Digit {
  bool is_array = false;
  int slot = -1;
  size_t index = 0;
  IntRange range;
};

struct Layout {
  DataState initial;
  std::vector<Digit> digits;
  uint64_t states = 1;
};

Layout Plan(const CodeMatrix& matrix, const DomainSpec& domains) {
  for (const auto& [name, range] : domains.scalars) {
    const Variable* v = matrix.FindVariable(name);
    if (!v || v->kind != VarKind::kInt) {
      throw DomainError(fmt::format("{} is not a scalar variable", name));
    }
    if (range.lo > range.hi) {
      throw DomainError(
          fmt::format("empty domain {}..{} for {}", range.lo, range.hi, name));
    }
  }
  for (const auto& [name, dom] : domains.arrays) {
    const Variable* v = matrix.FindVariable(name);
    if (!v || v->kind != VarKind::kIntArray) {
      throw DomainError(fmt::format("{} is not an array variable", name));
    }
    if (dom.length < 0) {
      throw DomainError(fmt::format("negative length for array {}", name));
    }
    if (dom.length > 0 && dom.elements.lo > dom.elements.hi) {
      throw DomainError(fmt::format("empty element domain {}..{} for {}",
                                    dom.elements.lo, dom.elements.hi, name));
    }
  }

  std::optional<IntRange> hull;
  for (const auto& [name, range] : domains.scalars) {
    hull = hull ? IntRange{std::min(hull->lo, range.lo),
                           std::max(hull->hi, range.hi)}
                : range;
  }

  Layout layout;
  layout.initial.scalars.resize(matrix.ScalarCount());
  layout.initial.arrays.resize(matrix.ArrayCount());
  std::vector<Digit> array_digits;
  for (const auto& v : matrix.variables) {
    if (v.kind == VarKind::kInt) {
      auto it = domains.scalars.find(v.name);
      IntRange range;
      if (it != domains.scalars.end()) {
        range = it->second;
      } else if (!v.is_param && hull) {
        range = *hull;
      } else {
        throw DomainError(fmt::format("missing domain for variable {}", v.name));
      }
      layout.initial.scalars[v.slot] = range.lo;
      layout.digits.push_back({false, v.slot, 0, range});
    } else {
      auto it = domains.arrays.find(v.name);
      if (it == domains.arrays.end()) {
        throw DomainError(fmt::format("missing length for array {}", v.name));
      }
      const ArrayDomain& dom = it->second;
      layout.initial.arrays[v.slot].assign(dom.length, dom.elements.lo);
      for (int64_t i = 0; i < dom.length; ++i) {
        array_digits.push_back(
            {true, v.slot, static_cast<size_t>(i), dom.elements});
      }
    }
  }
  layout.digits.insert(layout.digits.end(), array_digits.begin(),
                       array_digits.end());

  for (const auto& d : layout.digits) {
    auto width = static_cast<unsigned __int128>(
        static_cast<__int128>(d.range.hi) - d.range.lo + 1);
    unsigned __int128 product = layout.states * width;
    if (width > UINT64_MAX || product > UINT64_MAX) {
      layout.states = UINT64_MAX;
      break;
    }
    layout.states = static_cast<uint64_t>(product);
  }
  return layout;
}

// Advances to the next state; false after the last one.
bool Increment(const std::vector<Digit>& digits, DataState& state) {
  for (const auto& d : digits) {
    int64_t& cell =
        d.is_array ? state.arrays[d.slot][d.index] : state.scalars[d.slot];
    if (cell < d.range.hi) {
      ++cell;
      return true;
    }
    cell = d.range.lo;
  }
  return false;
}

}  // namespace

uint64_t CountStates(const CodeMatrix& matrix, const DomainSpec& domains) {
  return Plan(matrix, domains).states;
}

void EnumerateStates(const CodeMatrix& matrix, const DomainSpec& domains,
                     const std::function<void(const DataState&)>& visit) {
  Layout layout = Plan(matrix, domains);
  DataState state = layout.initial;
  do {
    visit(state);
  } while (Increment(layout.digits, state));
}

BoundedCheckReport CheckTriplesBounded(const CodeMatrix& matrix,
                                       const DomainSpec& domains,
                                       const BoundedCheckOptions& options) {
  Layout layout = Plan(matrix, domains);
  if (layout.states > options.cap) {
    throw DomainError(fmt::format("domain has {} states, exceeding the cap of {}",
                                  layout.states == UINT64_MAX
                                      ? std::string("more than 2^64")
                                      : std::to_string(layout.states),
                                  options.cap));
  }

  BoundedCheckReport report;
  report.states = layout.states;
  report.triples = ExtractTriples(matrix);
  std::vector<int> selected;
  if (options.triples) {
    for (int t : *options.triples) {
      if (t < 0 || t >= static_cast<int>(report.triples.size())) {
        throw DomainError(fmt::format("no triple with index {}", t));
      }
      selected.push_back(t);
    }
  } else {
    for (int t = 0; t < static_cast<int>(report.triples.size()); ++t) {
      selected.push_back(t);
    }
  }

  const FormulaEnv env = FormulaEnv::Of(matrix);
  for (int t : selected) {
    const HoareTriple& triple = report.triples[t];
    const GateDecl& gate = matrix.gates[triple.gate];
    const Location& pre = matrix.locations[triple.pre_location];
    const Location& post = matrix.locations[triple.post_location];
    TripleStats stats{t, 0, 0};
    size_t kept = 0;
    auto record = [&](Counterexample cex) {
      ++stats.counterexamples;
      if (kept < options.max_counterexamples) {
        report.counterexamples.push_back(std::move(cex));
        ++kept;
      }
    };

    DataState state = layout.initial;
    DataState work;
    do {
      bool holds = false;
      try {
        holds = EvalAssertion(pre, state, env);
      } catch (const FaultError&) {
        // An undefined precondition does not hold.
      }
      if (!holds) continue;
      work = state;
      std::optional<Fault> fault;
      GateStatus status = ApplyGateInPlace(gate, work, fault);
      if (status == GateStatus::kBlocked) continue;
      ++stats.pre_satisfied;
      if (status == GateStatus::kFault) {
        record({t, CounterexampleKind::kFault, state, state, "", fault});
        continue;
      }
      try {
        if (!EvalAssertion(post, work, env)) {
          record({t, CounterexampleKind::kViolation, state, work,
                  post.AssertionText(), std::nullopt});
        }
      } catch (const FaultError& e) {
        record({t, CounterexampleKind::kViolation, state, work,
                post.AssertionText(), e.fault()});
      }
    } while (Increment(layout.digits, state));
    report.per_triple.push_back(stats);
  }
  return report;
}

}  // namespace mcx
