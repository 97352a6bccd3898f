#include "nabelian/corpus.hpp"

#include "nabelian/scalar.hpp"

namespace nab {

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;

  out.push_back({"semisimple3",
                 R"(# Three isolated vertices: the semisimple algebra k x k x k.
field Q
vertex 1 2 3

module demo
dim 1 2 0
)",
                 {3, 0, false, true, 0, "AllN", 0}});

  out.push_back({"a2_hereditary",
                 R"(# Path algebra of the A2 quiver 1 -> 2, no relations.
field Q
vertex 1 2
arrow a 1 2

module s1
dim 1 0
)",
                 {3, 1, false, false, 1, "NotNAbelianUpTo", 0}});

  out.push_back({"auslander_kx2",
                 R"(# Auslander algebra of k[x]/(x^2): vertices for the two
# indecomposables, maps both ways, and the composite through vertex 2 is zero.
field Q
vertex 1 2
arrow a 1 2
arrow b 2 1
relation a*b

module s1
dim 1 0

module p1
dim 1 1
map a [[1]]
map b [[0]]
)",
                 {5, 2, false, false, 2, "ExactlyN", 1}});

  out.push_back({"nakayama_x2",
                 R"(# The dual numbers over F_2: one loop with square zero.
field F 2
vertex 1
arrow x 1 1
relation x*x

module s
dim 1
map x [[0]]
)",
                 {2, 0, true, true, 0, "NotNAbelianUpTo", 0}});

  out.push_back({"aus2_a2",
                 R"(# 2-Auslander algebra of the A2 quiver: linear A4 with both
# length-two composites zero (k A4 / rad^2), over F_5.
field F 5
vertex 1 2 3 4
arrow a 1 2
arrow b 2 3
arrow c 3 4
relation a*b
relation b*c

module s1
dim 1 0 0 0
)",
                 {7, 3, false, false, 3, "ExactlyN", 2}});

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = make_corpus();
  return entries;
}

const CorpusEntry& load_corpus(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  throw Error("unknown-corpus", "no bundled algebra named '" + name + "'");
}

}  // namespace nab
