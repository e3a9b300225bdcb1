#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fibercover/kernels.hpp"

namespace fibercover {

// A corpus case is a directory holding case.json:
//
//   {"name": ..., "provenance": ..., "gate": true,
//    "inputs": {"covers": ["a.cov", "b.cov"]} | {"maps": ["expr", "expr"]},
//    "expected": {"components": 1, "genera": [4], ...}}
//
// Map inputs go through monodromy_pair. Recognised expectation keys:
// components, genera, sizes, degree_pairs, singular (label, n1, n2,
// cone_count), cond1, cond2, connected, bound, isomorphic,
// group_orders, euler_characteristic.
struct CorpusOutcome {
  std::string name;
  bool gate = true;
  bool passed = false;
  std::string observed;                 // one-line summary
  std::vector<std::string> mismatches;  // or the error message
};

std::filesystem::path default_corpus_dir();

CorpusOutcome run_case(const std::filesystem::path& case_dir, Execution exec = Execution::serial);

// Every case directory under `dir`, sorted by name; cases run concurrently.
std::vector<CorpusOutcome> run_corpus(const std::filesystem::path& dir,
                                      Execution exec = Execution::parallel);

std::string corpus_table(const std::vector<CorpusOutcome>& outcomes);

// All gating cases passed.
bool corpus_passed(const std::vector<CorpusOutcome>& outcomes);

}  // namespace fibercover
