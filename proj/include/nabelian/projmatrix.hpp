#pragma once

#include "nabelian/algebra.hpp"

namespace nab {

// Matrix of algebra elements presenting a map of right modules
//   f : ⊕_r P(row_vertices[r]) -> ⊕_c P(col_vertices[c]),
// where P(i) = e_i Λ. The entry at (r,c) is supported on paths
// col_vertices[c] -> row_vertices[r] (the Hom-space of projectives in those
// positions), and f sends x = (x_r) to y with y_c = Σ_r entry(r,c)·x_r.
struct ProjMatrix {
  AlgebraPtr alg;
  std::vector<int> row_vertices;  // source summands
  std::vector<int> col_vertices;  // target summands
  std::vector<AlgElem> entries;   // row-major

  int rows() const { return static_cast<int>(row_vertices.size()); }
  int cols() const { return static_cast<int>(col_vertices.size()); }
  AlgElem& at(int r, int c) { return entries[r * cols() + c]; }
  const AlgElem& at(int r, int c) const { return entries[r * cols() + c]; }
};

ProjMatrix pm_zero(AlgebraPtr alg, std::vector<int> row_vertices,
                   std::vector<int> col_vertices);
ProjMatrix pm_identity(AlgebraPtr alg, std::vector<int> vertices);

// Throws Error("bad-projmatrix") when an entry has a term whose endpoints do
// not match its row/column vertices.
void pm_validate(const ProjMatrix& m);

// f then g; requires f.col_vertices == g.row_vertices.
ProjMatrix pm_compose(const ProjMatrix& f, const ProjMatrix& g);

bool pm_eq(const ProjMatrix& a, const ProjMatrix& b);
bool pm_is_zero(const ProjMatrix& a);

// The dual map Hom(-,Λ) as a matrix over the opposite algebra: transposed,
// every path reversed. Applying twice gives back the original entries.
ProjMatrix dual_projmatrix(const ProjMatrix& f);

std::string pm_to_string(const ProjMatrix& m);

}  // namespace nab
