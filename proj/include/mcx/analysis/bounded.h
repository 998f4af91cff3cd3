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

#ifndef MCX_ANALYSIS_BOUNDED_H_
#define MCX_ANALYSIS_BOUNDED_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcx/analysis/triples.h"
#include "mcx/machine/eval.h"
#include "mcx/syntax/ast.h"

namespace mcx {

struct IntRange {
  int64_t lo = 0;
  int64_t hi = 0;

  bool operator==(const IntRange&) const = default;
};

struct ArrayDomain {
  int64_t length = 0;
  IntRange elements;
};

// Finite domains for bounded checking. Every parameter and array needs an
// entry. A scalar local without one ranges over the hull of the scalar
// ranges that were given.
struct DomainSpec {
  std::map<std::string, IntRange, std::less<>> scalars;
  std::map<std::string, ArrayDomain, std::less<>> arrays;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BoundedCheckOptions {
  uint64_t cap = 10'000'000;
  // Indices into ExtractTriples(); all triples when unset.
  std::optional<std::vector<int>> triples;
  // Counterexamples kept per triple; the statistics still count all.
  size_t max_counterexamples = std::numeric_limits<size_t>::max();
};

enum class CounterexampleKind {
  kViolation,  // post-assertion false (or its evaluation faulted)
  kFault,      // the statements faulted
};

struct Counterexample {
  int triple = -1;
  CounterexampleKind kind = CounterexampleKind::kViolation;
  DataState pre_state;
  // Equal to pre_state for kFault.
  DataState post_state;
  std::string violated;
  std::optional<Fault> fault;
};

struct TripleStats {
  int triple = -1;
  uint64_t pre_satisfied = 0;
  uint64_t counterexamples = 0;
};

struct BoundedCheckReport {
  uint64_t states = 0;
  std::vector<HoareTriple> triples;
  std::vector<TripleStats> per_triple;
  std::vector<Counterexample> counterexamples;
};

// Number of states `domains` describes, or DomainError when it does
// not cover the matrix. Saturates at UINT64_MAX.
uint64_t CountStates(const CodeMatrix& matrix, const DomainSpec& domains);

// For each triple and each state of the domain (scalars vary fastest in
// declaration order, then array elements by index): when the pre-location
// assertion holds and the gate does not block, check the post-location
// assertion on the resulting state. Throws DomainError when the domain is
// incomplete or larger than `options.cap`.
BoundedCheckReport CheckTriplesBounded(const CodeMatrix& matrix,
                                       const DomainSpec& domains,
                                       const BoundedCheckOptions& options = {});

// Calls `visit` on every state of the domain, in enumeration order.
void EnumerateStates(const CodeMatrix& matrix, const DomainSpec& domains,
                     const std::function<void(const DataState&)>& visit);

}  // namespace mcx

#endif  // MCX_ANALYSIS_BOUNDED_H_
