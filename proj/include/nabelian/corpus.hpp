#pragma once

#include <string>
#include <vector>

namespace nab {

// Expected invariants of a bundled algebra, validated by the test suite.
struct CorpusExpected {
  int dimension = 0;
  int gldim = 0;
  bool gldim_above_cap = false;
  bool domdim_infinite = false;
  int domdim = 0;  // meaningful when finite
  std::string verdict;  // "AllN", "ExactlyN", or "NotNAbelianUpTo"
  int n = 0;            // meaningful for ExactlyN
};

struct CorpusEntry {
  std::string name;
  std::string content;  // byte-identical to corpus/<name>.alg
  CorpusExpected expected;
};

const std::vector<CorpusEntry>& corpus();
// Error("unknown-corpus") when the name is not bundled.
const CorpusEntry& load_corpus(const std::string& name);

}  // namespace nab
