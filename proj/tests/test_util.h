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

#ifndef MCX_TESTS_TEST_UTIL_H_
#define MCX_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcx/cli/cli.h"
#include "mcx/syntax/parser.h"

namespace mcx::testing {

inline std::string CorpusPath(const std::string& name) {
  return std::string(MCX_CORPUS_DIR) + "/" + name + ".mcx";
}

inline std::string TestdataPath(const std::string& name) {
  return std::string(MCX_TESTDATA_DIR) + "/" + name;
}

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Parses a matrix from text; throws with the first error on failure.
inline CodeMatrix MustParse(const std::string& text) {
  ParseResult result = ParseMatrix(text);
  if (!result.ok()) {
    throw std::runtime_error("parse failed: " + result.errors[0].ToString());
  }
  return std::move(*result.matrix);
}

inline CodeMatrix LoadCorpus(const std::string& name) {
  return MustParse(ReadText(CorpusPath(name)));
}

inline const std::vector<std::string>& CorpusNames() {
  static const std::vector<std::string> names = {
      "primes0", "primes1", "primes2", "primes3", "primes3_bad",
      "gcd",     "gcd_bad", "factorial", "overlap", "minimal"};
  return names;
}

// The first `count` primes by trial division.
inline std::vector<int64_t> TrialDivisionPrimes(size_t count) {
  std::vector<int64_t> primes;
  for (int64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (int64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline CliResult RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::Main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace mcx::testing

#endif  // MCX_TESTS_TEST_UTIL_H_
