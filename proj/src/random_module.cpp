#include "nabelian/representation.hpp"

namespace nab {

namespace {

// Small scalars with a bias toward 0 and ±1 so that presentations mix dead
// entries, units and genuine relations.
Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  switch (rng() % 8) {
    case 0:
    case 1:
    case 2:
      return f.zero();
    case 3:
    case 4:
      return f.one();
    case 5:
      return f.neg(f.one());
    default:
      return f.from_long(static_cast<long>(rng() % 5) - 2);
  }
}

}  // namespace

ProjMatrix random_projmatrix(const AlgebraPtr& alg, std::mt19937_64& rng,
                             int max_summands) {
  const Quiver& quiver = alg->quiver;
  Field f = alg->f();
  int nv = quiver.vertex_count();
  int ncols = 1 + static_cast<int>(rng() % max_summands);
  int nrows = static_cast<int>(rng() % (max_summands + 1));
  std::vector<int> rows_v, cols_v;
  for (int c = 0; c < ncols; ++c) cols_v.push_back(static_cast<int>(rng() % nv));
  for (int r = 0; r < nrows; ++r) rows_v.push_back(static_cast<int>(rng() % nv));
  ProjMatrix m = pm_zero(alg, rows_v, cols_v);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) {
      AlgElem entry;
      for (int idx : alg->paths_between[cols_v[c]][rows_v[r]]) {
        Scalar s = random_scalar(f, rng);
        if (!f.is_zero(s)) entry.emplace(alg->basis[idx], s);
      }
      m.at(r, c) = std::move(entry);
    }
  return m;
}

Representation random_module(const AlgebraPtr& alg, std::uint64_t seed,
                             int max_vertex_dim) {
  if (max_vertex_dim < 1)
    throw Error("bad-argument", "max_vertex_dim must be at least 1");
  std::mt19937_64 rng(seed);
  ProjMatrix pres = random_projmatrix(alg, rng, max_vertex_dim);
  ProjSum src = make_proj_sum(alg, pres.row_vertices);
  ProjSum dst = make_proj_sum(alg, pres.col_vertices);
  ModuleMap f = realize_projmatrix(pres, src, dst);
  return map_cokernel(f).rep;
}

}  // namespace nab
