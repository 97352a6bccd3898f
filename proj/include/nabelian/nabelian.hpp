#pragma once

#include "nabelian/homology.hpp"

namespace nab {

// Hom(M, A) as a module over the opposite algebra, together with the chosen
// bases Hom(M, P(i)) of its vertex spaces.
struct StarModule {
  Representation rep;
  std::vector<std::vector<ModuleMap>> basis;
};
StarModule star_module(const Representation& m);
Representation star_dual(const Representation& m);
// Functorial action: for h: M -> N, the induced map N* -> M* in the chosen
// bases (precomposition with h).
ModuleMap star_map(const ModuleMap& h, const StarModule& target_star,
                   const StarModule& source_star);

// Cokernel of the dualized minimal presentation P_1 -> P_0 -> M -> 0; the
// minimal choice pins a canonical representative.
struct TransposeResult {
  Representation rep;        // over the opposite algebra
  ProjMatrix presentation;   // the minimal presentation map P_1 -> P_0
};
TransposeResult transpose(const Representation& m);

// Ext^i(Tr M, -) vanishing against the opposite regular module in degrees
// 1..k.
bool is_k_torsion_free(const Representation& m, int k);

// 0 -> e1 -> M -> M** -> e2 -> 0 with the canonical evaluation map eta.
struct DoubleDualSequence {
  Representation module;
  Representation star;         // M*,  over the opposite algebra
  Representation double_star;  // M**, back over the base algebra
  ModuleMap eta;               // M -> M**
  Representation e1;           // kernel of eta
  Representation e2;           // cokernel of eta
};
DoubleDualSequence double_dual_sequence(const Representation& m);

// pdim M <= m with Ext^i(M, A) = 0 for 1 <= i <= m-1.
bool is_m_spherical(const Representation& m, int spherical_m);

// Composable morphisms between sums of projectives, stored left to right:
// maps[0] is applied first.
struct SequenceOfProjectives {
  std::vector<ProjMatrix> maps;
};

enum class SequenceMode { PreSegment, Segment, PreCosegment, Cosegment, NExact };

// Exactness of the realized sequence on the module side and, where the mode
// demands it, of the dualized sequence over the opposite algebra. For
// NExact, n must satisfy maps.size() == n + 1 and both sides carry leading
// zeros.
bool check_sequence(const SequenceOfProjectives& seq, SequenceMode mode,
                    int n = 0);

// Continuation g_1..g_n of f whose dualized concatenation with f is exact;
// built from the minimal resolution of ker(dual f). Throws
// Error("resolution-exceeds-length") when that kernel has projective
// dimension above n-1, in which case no n-cokernel exists.
SequenceOfProjectives n_cokernel(const ProjMatrix& f, int n);
SequenceOfProjectives n_kernel(const ProjMatrix& f, int n);

// For a sequence that passed check_sequence(seq, NExact, maps.size()-1):
// solvability of a section for the last map, cross-checked against a
// retraction for the first.
bool splits(const SequenceOfProjectives& seq);

bool is_von_neumann_regular(const AlgebraPtr& a);

struct IsNAbelianResult {
  bool value = false;
  DimResult gl;      // computed with cap n+2
  DomdimResult dom;  // computed with cap n+1
};
// gldim(mod A) <= n+1 <= domdim(mod A), the complete criterion.
IsNAbelianResult is_n_abelian(const AlgebraPtr& a, int n);

struct NAbelianVerdict {
  enum class Kind { AllN, ExactlyN, NotNAbelianUpTo };
  Kind kind = Kind::NotNAbelianUpTo;
  int n = 0;    // meaningful for ExactlyN
  int cap = 0;  // search bound used
  DimResult gl;
  DomdimResult dom;
  std::string justification;
};
// gldim 0 gives AllN; gldim g with 2 <= g <= cap leaves n = g-1 as the only
// candidate; gldim 1 or above cap rules out every n <= cap-1.
NAbelianVerdict detect_n(const AlgebraPtr& a, int cap);

struct CheckOutcome {
  std::string name;
  bool pass = true;
  int samples = 0;
  std::string witness;  // description of the first counterexample
};
struct CrossCheckReport {
  std::vector<CheckOutcome> checks;
  bool all_pass = true;
  // An unconditional identity failed, or the algebra was expected to be
  // n-abelian and a counterexample to one of its consequences appeared.
  bool fatal = false;
  std::string fatal_reason;
};
// Seeded sampling of the consequences of n-abelianness plus unconditional
// identities (gldim symmetry, double dual exactness, the Tor/stable-hom
// identity, section/retraction agreement).
CrossCheckReport cross_check(const AlgebraPtr& a, int n, uint64_t seed,
                             int samples, bool expect_n_abelian);

}  // namespace nab
