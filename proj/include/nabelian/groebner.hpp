#pragma once

#include <map>

#include "nabelian/quiver.hpp"

namespace nab {

// Sparse linear combination of paths. Used both for relations (where all
// terms are parallel) and for general path-algebra elements.
using AlgElem = std::map<Path, Scalar, PathLess>;

struct RelationTerm {
  Scalar coeff;
  std::vector<int> arrows;  // arrow indices, composed left to right
};

struct Relation {
  std::vector<RelationTerm> terms;
};

using RelationSet = std::vector<Relation>;

// A completed rewriting system for the two-sided ideal generated by the
// relations. Elements are monic with tails in normal form; leading words form
// an antichain under the subword order. Rewriting never increases word
// length, so resolving all overlaps of word length <= 2*degree_cap makes the
// normal form confluent on every word of length <= 2*degree_cap; all products
// the toolkit forms stay below that bound.
struct Groebner {
  FieldSpec field;
  std::vector<AlgElem> elems;
  std::vector<Path> leads;  // leads[k] = leading word of elems[k]
  int degree_cap = 0;
  bool finite_below_cap = false;  // no irreducible word of length == degree_cap
};

AlgElem elem_add(const Field& f, const AlgElem& a, const AlgElem& b);
AlgElem elem_scaled(const Field& f, const AlgElem& a, const Scalar& s);
// Formal concatenation product; non-composable term pairs contribute zero.
AlgElem elem_concat(const Field& f, const AlgElem& a, const AlgElem& b);
bool elem_eq(const Field& f, const AlgElem& a, const AlgElem& b);

// Fully reduces x modulo the system (leftmost occurrence, first basis
// element; deterministic).
AlgElem normal_form(const Groebner& g, const AlgElem& x);

// Buchberger completion under the length-lexicographic order. Validates the
// relation set (parallel composable terms). Sets finite_below_cap by
// enumerating irreducible words.
// Errors: "bad-relation" on malformed input; "inadmissible" when a relation
// normalizes to a combination containing a path of length < 2;
// "groebner-fuel-exhausted" when completion exceeds its work bounds.
Groebner groebner_complete(FieldSpec field, const Quiver& quiver,
                           const RelationSet& relations, int degree_cap);

// All irreducible words of length < max_len, in length-lex order.
std::vector<Path> normal_words(const Quiver& quiver, const Groebner& g,
                               int max_len);

}  // namespace nab
