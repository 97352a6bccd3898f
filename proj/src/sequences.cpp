#include "nabelian/nabelian.hpp"

namespace nab {

namespace {

void validate_sequence(const std::vector<ProjMatrix>& maps) {
  if (maps.empty()) throw Error("bad-sequence", "empty sequence");
  const AlgebraPtr& alg = maps[0].alg;
  for (const ProjMatrix& f : maps) {
    pm_validate(f);
    if (f.alg.get() != alg.get() && !f.alg->same_presentation(*alg))
      throw Error("bad-sequence", "morphisms live over different algebras");
  }
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    if (maps[i].col_vertices != maps[i + 1].row_vertices)
      throw Error("bad-sequence", "consecutive morphisms do not compose");
}

// Realized morphisms in composition order.
std::vector<ModuleMap> module_chain(const std::vector<ProjMatrix>& maps) {
  const AlgebraPtr& alg = maps[0].alg;
  std::vector<ProjSum> sums;
  sums.push_back(make_proj_sum(alg, maps[0].row_vertices));
  for (const ProjMatrix& f : maps)
    sums.push_back(make_proj_sum(alg, f.col_vertices));
  std::vector<ModuleMap> chain;
  for (size_t i = 0; i < maps.size(); ++i)
    chain.push_back(realize_projmatrix(maps[i], sums[i], sums[i + 1]));
  return chain;
}

// Dualized morphisms over the opposite algebra, again in composition order
// (the order reverses).
std::vector<ModuleMap> dual_chain(const std::vector<ProjMatrix>& maps) {
  const AlgebraPtr& op = opposite(maps[0].alg);
  std::vector<ProjSum> sums;
  sums.push_back(make_proj_sum(op, maps[0].row_vertices));
  for (const ProjMatrix& f : maps)
    sums.push_back(make_proj_sum(op, f.col_vertices));
  std::vector<ModuleMap> chain;
  for (size_t i = maps.size(); i-- > 0;)
    chain.push_back(
        realize_projmatrix(dual_projmatrix(maps[i]), sums[i + 1], sums[i]));
  return chain;
}

int total_rank(const ModuleMap& f) {
  int r = 0;
  for (const ExactMatrix& b : f.blocks) r += rank(b);
  return r;
}

// Exactness of the chain at every object with maps on both sides; with
// leading_zero also injectivity of the first map.
bool complex_and_exact(const std::vector<ModuleMap>& chain,
                       bool leading_zero) {
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!map_is_zero(compose_maps(chain[i], chain[i + 1]))) return false;
  if (leading_zero &&
      total_rank(chain[0]) != chain[0].source.total_dim())
    return false;
  for (size_t j = 1; j < chain.size(); ++j)
    if (total_rank(chain[j - 1]) !=
        chain[j].source.total_dim() - total_rank(chain[j]))
      return false;
  return true;
}

}  // namespace

bool check_sequence(const SequenceOfProjectives& seq, SequenceMode mode,
                    int n) {
  validate_sequence(seq.maps);
  if (mode == SequenceMode::NExact &&
      static_cast<int>(seq.maps.size()) != n + 1)
    throw Error("bad-argument", "an n-exact sequence needs n + 1 morphisms");

  switch (mode) {
    case SequenceMode::PreSegment:
      return complex_and_exact(module_chain(seq.maps), true);
    case SequenceMode::Segment:
      return complex_and_exact(module_chain(seq.maps), true) &&
             complex_and_exact(dual_chain(seq.maps), false);
    case SequenceMode::PreCosegment:
      return complex_and_exact(dual_chain(seq.maps), true);
    case SequenceMode::Cosegment:
      return complex_and_exact(dual_chain(seq.maps), true) &&
             complex_and_exact(module_chain(seq.maps), false);
    case SequenceMode::NExact:
      return complex_and_exact(module_chain(seq.maps), true) &&
             complex_and_exact(dual_chain(seq.maps), true);
  }
  throw Error("bad-argument", "unknown sequence mode");
}

SequenceOfProjectives n_cokernel(const ProjMatrix& f, int n) {
  if (n < 1) throw Error("bad-argument", "n-cokernels need n >= 1");
  pm_validate(f);
  const AlgebraPtr& alg = f.alg;
  AlgebraPtr op = opposite(alg);

  ProjMatrix u = dual_projmatrix(f);
  ProjSum ystar = make_proj_sum(op, u.row_vertices);
  ProjSum xstar = make_proj_sum(op, u.col_vertices);
  SubQuot k = map_kernel(realize_projmatrix(u, ystar, xstar));

  Resolution res = minimal_resolution(k.rep, n - 1);
  if (!res.complete)
    throw Error("resolution-exceeds-length",
                "the kernel of the dualized morphism has projective "
                "dimension above n - 1");

  SequenceOfProjectives out;
  out.maps.push_back(dual_projmatrix(
      extract_projmatrix(compose_maps(res.augmentation, k.map), res.terms[0],
                         ystar)));
  for (int i = 0; i < res.length(); ++i)
    out.maps.push_back(dual_projmatrix(res.differentials[i]));
  while (static_cast<int>(out.maps.size()) < n)
    out.maps.push_back(pm_zero(alg, out.maps.back().col_vertices, {}));

  // Defining exactness: the dualized concatenation with f is exact with a
  // leading zero.
  std::vector<ProjMatrix> full;
  full.push_back(f);
  full.insert(full.end(), out.maps.begin(), out.maps.end());
  validate_sequence(full);
  if (!complex_and_exact(dual_chain(full), true))
    throw Error("internal", "constructed n-cokernel fails its exactness");
  return out;
}

SequenceOfProjectives n_kernel(const ProjMatrix& f, int n) {
  SequenceOfProjectives co = n_cokernel(dual_projmatrix(f), n);
  SequenceOfProjectives out;
  for (size_t i = co.maps.size(); i-- > 0;)
    out.maps.push_back(dual_projmatrix(co.maps[i]));
  return out;
}

bool splits(const SequenceOfProjectives& seq) {
  int n = static_cast<int>(seq.maps.size()) - 1;
  if (n < 1 || !check_sequence(seq, SequenceMode::NExact, n))
    throw Error("bad-sequence", "splitting is defined for n-exact sequences");

  const AlgebraPtr& alg = seq.maps[0].alg;
  auto flatten = [](const ModuleMap& f) {
    int coords = 0;
    for (const ExactMatrix& b : f.blocks) coords += b.rows() * b.cols();
    ExactMatrix row(f.source.alg->field, 1, coords);
    int pos = 0;
    for (const ExactMatrix& b : f.blocks)
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) row.set(0, pos++, b.at(p, q));
    return row;
  };
  // Solvability of g in hom(src, dst) with (pre ? g . fixed : fixed . g) = id.
  auto solvable = [&](const ProjMatrix& fixed_pm, bool section) {
    ProjSum a = make_proj_sum(alg, fixed_pm.row_vertices);
    ProjSum b = make_proj_sum(alg, fixed_pm.col_vertices);
    ModuleMap fixed = realize_projmatrix(fixed_pm, a, b);
    std::vector<ModuleMap> homs = hom_basis(b.rep, a.rep);
    const ModuleMap id = identity_map(section ? b.rep : a.rep);
    ExactMatrix stacked(alg->field, 0, flatten(id).cols());
    for (const ModuleMap& g : homs)
      stacked = stacked.vstack(
          flatten(section ? compose_maps(g, fixed) : compose_maps(fixed, g)));
    return solve(stacked, flatten(id)).has_value();
  };

  bool h1_split_epi = solvable(seq.maps.back(), true);
  bool last_split_mono = solvable(seq.maps.front(), false);
  if (h1_split_epi != last_split_mono)
    throw Error("internal",
                "section and retraction tests disagree on a split sequence");
  return h1_split_epi;
}

}  // namespace nab
