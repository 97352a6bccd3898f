#pragma once

#include <memory>
#include <mutex>

#include "nabelian/groebner.hpp"
#include "nabelian/matrix.hpp"

namespace nab {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// Finite-dimensional algebra kQ/I presented by an admissible ideal, with the
// irreducible paths as basis. Immutable after build_algebra returns.
class BoundQuiverAlgebra
    : public std::enable_shared_from_this<BoundQuiverAlgebra> {
 public:
  FieldSpec field;
  Quiver quiver;
  Groebner groebner;
  RelationSet input_relations;

  std::vector<Path> basis;  // length-lex order; trivial paths come first
  int dim = 0;
  std::vector<int> idem_index;  // basis position of e_i per vertex
  // paths_between[i][j] = basis positions of the paths i -> j, increasing.
  std::vector<std::vector<std::vector<int>>> paths_between;
  // table[i][j] = basis expansion of basis[i]*basis[j], sparse by position.
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table;

  Field f() const { return Field(field); }

  AlgElem nf(const AlgElem& x) const { return normal_form(groebner, x); }
  AlgElem mul(const AlgElem& a, const AlgElem& b) const {
    return nf(elem_concat(f(), a, b));
  }
  AlgElem idempotent(int vertex) const;
  AlgElem one() const;

  int basis_index(const Path& p) const;  // -1 when p is not a basis word

  // Coordinates of an element (already in normal form) as a 1 x dim row.
  ExactMatrix elem_row(const AlgElem& x) const;
  AlgElem row_elem(const ExactMatrix& m, int r) const;

  std::string elem_to_string(const AlgElem& x) const;

  // Structural fingerprint; equal fingerprints mean interchangeable algebras
  // (same field, quiver, completed relations).
  bool same_presentation(const BoundQuiverAlgebra& other) const;

 private:
  friend AlgebraPtr build_algebra(FieldSpec, const Quiver&, const RelationSet&,
                                  int);
  friend AlgebraPtr opposite(const AlgebraPtr& a);
  mutable std::shared_ptr<const BoundQuiverAlgebra> op_forward_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> op_back_;
};

// Completes the relations, certifies finite dimensionality and admissibility,
// and assembles basis + multiplication table.
// Errors: "not-finite-dimensional-below-cap" when an irreducible word of
// length degree_cap exists; "inadmissible" when the arrow ideal fails to be
// nilpotent; plus everything groebner_complete throws.
AlgebraPtr build_algebra(FieldSpec field, const Quiver& quiver,
                         const RelationSet& relations, int degree_cap = 20);

// The opposite algebra: reversed quiver, reversed relations, same cap.
// Cached, so opposite(opposite(a)) is the original object whenever the
// original is still alive; otherwise a content-identical rebuild.
AlgebraPtr opposite(const AlgebraPtr& a);

// Canonical anti-isomorphism: reverses every path of x and renormalizes in
// `to`, which must be the opposite presentation of `from`.
AlgElem reverse_elem(const BoundQuiverAlgebra& from,
                     const BoundQuiverAlgebra& to, const AlgElem& x);

}  // namespace nab
