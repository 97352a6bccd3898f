#pragma once

#include <random>

#include "nabelian/projmatrix.hpp"

namespace nab {

// Right module over a bound quiver algebra as a representation: a space per
// vertex, and for each arrow a: i -> j a dims(i) x dims(j) matrix acting on
// row vectors.
struct Representation {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<ExactMatrix> arrow_maps;

  int dim_at(int v) const { return dims[v]; }
  int total_dim() const;
};

// Natural transformation between representations: one block per vertex,
// commuting with every arrow action.
struct ModuleMap {
  Representation source;
  Representation target;
  std::vector<ExactMatrix> blocks;  // dims_src(v) x dims_tgt(v)
};

Representation zero_module(AlgebraPtr alg);
Representation direct_sum(const Representation& a, const Representation& b);
bool rep_eq(const Representation& a, const Representation& b);
bool rep_is_zero(const Representation& a);

// nullopt when all completed relations act by zero; otherwise a description
// of the first violation.
std::optional<std::string> validate(const Representation& m);
std::optional<std::string> validate_map(const ModuleMap& f);

// Product of arrow matrices along the path (dims(source) x dims(target)).
ExactMatrix path_action(const Representation& m, const Path& p);
// Action of a parallel linear combination supported on paths src -> dst.
ExactMatrix elem_action(const Representation& m, const AlgElem& x, int src,
                        int dst);

ModuleMap zero_map(Representation src, Representation dst);
ModuleMap identity_map(const Representation& m);
ModuleMap compose_maps(const ModuleMap& f, const ModuleMap& g);  // f then g
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scaled(const ModuleMap& f, const Scalar& s);
bool map_eq(const ModuleMap& f, const ModuleMap& g);
bool map_is_zero(const ModuleMap& f);

enum class StandardKind { Simple, Projective, Injective };
Representation standard_module(const AlgebraPtr& alg, StandardKind kind,
                               int vertex);

// Basis of Hom(M, N), deterministic (RREF order of the commuting-block
// system).
std::vector<ModuleMap> hom_basis(const Representation& m,
                                 const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct SubQuot {
  Representation rep;
  ModuleMap map;  // inclusion (kernels, socle) or projection (cokernels)
};
SubQuot map_kernel(const ModuleMap& f);
SubQuot map_cokernel(const ModuleMap& f);

struct TopRadical {
  Representation top;
  Representation rad;
  ModuleMap quotient;       // M -> top
  ModuleMap rad_inclusion;  // rad -> M
};
TopRadical top_radical(const Representation& m);
SubQuot socle(const Representation& m);

// Ordered direct sum of standard projectives with coordinate bookkeeping:
// at vertex j, summand s occupies columns [offsets[s][j], offsets[s][j] +
// #paths(vertices[s] -> j)), whose basis is the algebra's path list.
struct ProjSum {
  AlgebraPtr alg;
  std::vector<int> vertices;
  Representation rep;
  std::vector<std::vector<int>> offsets;
};
ProjSum make_proj_sum(const AlgebraPtr& alg, std::vector<int> vertices);

// The module map realizing a ProjMatrix between the standard sums on its
// row (source) and column (target) vertices; inverse of extract_projmatrix.
ModuleMap realize_projmatrix(const ProjMatrix& m, const ProjSum& src,
                             const ProjSum& dst);
ProjMatrix extract_projmatrix(const ModuleMap& f, const ProjSum& src,
                              const ProjSum& dst);

struct Cover {
  ProjSum proj;
  ModuleMap epi;  // proj.rep -> M, kernel inside rad
};
Cover projective_cover(const Representation& m);

struct Envelope {
  Representation inj;
  ModuleMap mono;  // M -> inj, cokernel supported away from the socle
};
Envelope injective_envelope(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

// k-linear dual: same spaces over the opposite algebra, transposed actions.
Representation k_dual(const Representation& m);
// Contravariant on maps: dual_map(f: M -> N) : DN -> DM.
ModuleMap dual_map(const ModuleMap& f);

// Deterministic sample: cokernel of a random matrix between random sums of
// projectives, so relations hold by construction.
Representation random_module(const AlgebraPtr& alg, std::uint64_t seed,
                             int max_vertex_dim);
// Random entries in the correct Hom blocks; trivial paths allowed.
ProjMatrix random_projmatrix(const AlgebraPtr& alg, std::mt19937_64& rng,
                             int max_summands);

// An invertible element of Hom(M, N) when one can be found (equal dims plus
// random/exhaustive search through the Hom space).
std::optional<ModuleMap> find_isomorphism(const Representation& m,
                                          const Representation& n,
                                          std::uint64_t seed = 1);
bool isomorphic(const Representation& m, const Representation& n);

}  // namespace nab
