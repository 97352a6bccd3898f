#pragma once

#include "nabelian/representation.hpp"

namespace nab {

// Minimal projective resolution data: terms P_0, P_1, ... with differentials
// d_i: P_i -> P_{i-1} as matrices over the algebra, and the augmentation
// P_0 -> M. complete means the final syzygy vanished.
struct Resolution {
  Representation module;
  std::vector<ProjSum> terms;
  std::vector<ProjMatrix> differentials;
  ModuleMap augmentation;
  bool minimal = true;
  bool complete = false;

  int length() const { return static_cast<int>(differentials.size()); }
};

// Iterated projective covers of syzygies, stopping early when a syzygy is
// zero; differentials always have radical entries.
Resolution minimal_resolution(const Representation& m, int length);

// Recomputes the certificates: complex property, exactness by rank
// bookkeeping, minimality of entries. Throws Error("internal") on failure.
void verify_resolution(const Resolution& r);

struct DimResult {
  int value = 0;
  bool above_cap = false;
};
DimResult pdim(const Representation& m, int cap);
// Maximum of pdim over the simple modules.
DimResult gldim(const AlgebraPtr& a, int cap);
// Default cap for pdim/gldim style searches.
int default_dim_cap(const AlgebraPtr& a);

struct ExtTable {
  std::vector<int> dims;  // dim Ext^i, i = 0..cap
};
// Hom(-, N) applied to a minimal resolution of M; exact in all reported
// degrees (the resolution is extended one step past cap).
ExtTable ext_table(const Representation& m, const Representation& n, int cap);

// Ext^i(M, Λ) as modules over the opposite algebra, i = 0..cap, computed
// from the dualized minimal resolution. Index 0 is the full dual module M*.
std::vector<Representation> ext_modules_against_algebra(const Representation& m,
                                                        int cap);

struct TensorResult {
  int dim = 0;
  // Offsets of the vertex blocks M_v ⊗ N_v inside the ambient sum, plus the
  // projection of the ambient space onto quotient coordinates.
  std::vector<int> offsets;
  ExactMatrix projection;
};
// M ⊗_Λ N for a right module M and a left module N (a module over the
// opposite algebra): ⊕_v M_v ⊗ N_v modulo (m·a) ⊗ n - m ⊗ (a·n).
TensorResult tensor(const Representation& m, const Representation& n);

// dim Tor_i(M, N) for i = 0..cap via a minimal resolution of M.
std::vector<int> tor_table(const Representation& m, const Representation& n,
                           int cap);

// dim Hom(M, N) minus the maps that factor through a projective.
int stable_hom_dim(const Representation& m, const Representation& n);

struct DomdimResult {
  enum class Kind { Finite, AtLeastCap, Infinite };
  Kind kind = Kind::Finite;
  int value = 0;  // meaningful for Finite and AtLeastCap
};
// Number of leading terms of the minimal injective coresolution of Λ that
// are projective, computed by resolving D(Λ) over the opposite algebra.
DomdimResult domdim(const AlgebraPtr& a, int cap);

struct GradeResult {
  bool infinite = false;
  int value = 0;      // least i with Ext^i(M, Λ) nonzero, when finite
  bool certified = true;  // false when the cap was hit before pdim was known
};
GradeResult grade(const Representation& m, int cap);

// The regular module Λ = ⊕ P(v) as a representation.
Representation regular_module(const AlgebraPtr& a);

}  // namespace nab
