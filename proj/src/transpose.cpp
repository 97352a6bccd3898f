#include <algorithm>

#include "nabelian/nabelian.hpp"

namespace nab {

namespace {

ExactMatrix flatten_map(const ModuleMap& f) {
  int coords = 0;
  for (const ExactMatrix& b : f.blocks) coords += b.rows() * b.cols();
  ExactMatrix row(f.source.alg->field, 1, coords);
  int pos = 0;
  for (const ExactMatrix& b : f.blocks)
    for (int p = 0; p < b.rows(); ++p)
      for (int q = 0; q < b.cols(); ++q) row.set(0, pos++, b.at(p, q));
  return row;
}

// Coordinates of f in the given independent spanning set.
ExactMatrix coords_in_basis(const std::vector<ModuleMap>& basis,
                            const ModuleMap& f) {
  if (basis.empty()) {
    if (!map_is_zero(f))
      throw Error("internal", "map outside the computed hom space");
    return ExactMatrix(f.source.alg->field, 1, 0);
  }
  ExactMatrix stacked(f.source.alg->field, 0, flatten_map(basis[0]).cols());
  for (const ModuleMap& b : basis) stacked = stacked.vstack(flatten_map(b));
  auto x = solve(stacked, flatten_map(f));
  if (!x) throw Error("internal", "map outside the computed hom space");
  return *x;
}

// Left multiplication by the arrow a: src -> dst, as a map P(dst) -> P(src).
ModuleMap left_mult_by_arrow(const AlgebraPtr& alg, int arrow) {
  const Arrow& a = alg->quiver.arrows[arrow];
  ProjMatrix pm = pm_zero(alg, {a.dst}, {a.src});
  Path p{a.src, a.dst, {arrow}};
  pm.at(0, 0)[p] = Field(alg->field).one();
  return realize_projmatrix(pm, make_proj_sum(alg, {a.dst}),
                            make_proj_sum(alg, {a.src}));
}

// Change of basis from the paths j -> i of the algebra to the paths i -> j
// of its opposite (reversal followed by normal form).
ExactMatrix reversal_matrix(const AlgebraPtr& alg, const AlgebraPtr& op,
                            int j, int i) {
  Field f(alg->field);
  const std::vector<int>& src_list = alg->paths_between[j][i];
  const std::vector<int>& dst_list = op->paths_between[i][j];
  ExactMatrix t(alg->field, static_cast<int>(src_list.size()),
                static_cast<int>(dst_list.size()));
  for (size_t r = 0; r < src_list.size(); ++r) {
    AlgElem e;
    e[alg->basis[src_list[r]]] = f.one();
    AlgElem rev = reverse_elem(*alg, *op, e);
    for (const auto& [path, coeff] : rev) {
      int global = op->basis_index(path);
      auto it = std::find(dst_list.begin(), dst_list.end(), global);
      if (it == dst_list.end())
        throw Error("internal", "reversed path leaves its hom block");
      t.set(static_cast<int>(r), static_cast<int>(it - dst_list.begin()),
            coeff);
    }
  }
  return t;
}

}  // namespace

StarModule star_module(const Representation& m) {
  const AlgebraPtr& alg = m.alg;
  AlgebraPtr op = opposite(alg);
  int nv = alg->quiver.vertex_count();

  StarModule out;
  out.basis.resize(nv);
  std::vector<Representation> projs;
  for (int v = 0; v < nv; ++v) {
    projs.push_back(make_proj_sum(alg, {v}).rep);
    out.basis[v] = hom_basis(m, projs[v]);
  }

  Representation rep;
  rep.alg = op;
  rep.dims.resize(nv);
  for (int v = 0; v < nv; ++v)
    rep.dims[v] = static_cast<int>(out.basis[v].size());
  for (int k = 0; k < alg->quiver.arrow_count(); ++k) {
    const Arrow& a = alg->quiver.arrows[k];
    // The opposite arrow runs a.dst -> a.src; it acts by postcomposition
    // with left multiplication by a.
    ModuleMap lm = left_mult_by_arrow(alg, k);
    ExactMatrix block(alg->field, rep.dims[a.dst], rep.dims[a.src]);
    for (int q = 0; q < rep.dims[a.dst]; ++q) {
      ModuleMap moved = compose_maps(out.basis[a.dst][q], lm);
      block.paste(coords_in_basis(out.basis[a.src], moved), q, 0);
    }
    rep.arrow_maps.push_back(std::move(block));
  }
  out.rep = std::move(rep);
  return out;
}

Representation star_dual(const Representation& m) {
  return star_module(m).rep;
}

ModuleMap star_map(const ModuleMap& h, const StarModule& target_star,
                   const StarModule& source_star) {
  ModuleMap out = zero_map(target_star.rep, source_star.rep);
  for (size_t v = 0; v < out.blocks.size(); ++v)
    for (int q = 0; q < target_star.rep.dims[v]; ++q) {
      ModuleMap pulled = compose_maps(h, target_star.basis[v][q]);
      out.blocks[v].paste(coords_in_basis(source_star.basis[v], pulled), q, 0);
    }
  return out;
}

TransposeResult transpose(const Representation& m) {
  const AlgebraPtr& alg = m.alg;
  AlgebraPtr op = opposite(alg);
  Resolution res = minimal_resolution(m, 1);

  ProjMatrix d = res.length() >= 1
                     ? res.differentials[0]
                     : pm_zero(alg, {}, res.terms[0].vertices);
  ProjMatrix u = dual_projmatrix(d);
  ModuleMap realized =
      realize_projmatrix(u, make_proj_sum(op, u.row_vertices),
                         make_proj_sum(op, u.col_vertices));
  TransposeResult out;
  out.rep = map_cokernel(realized).rep;
  out.presentation = std::move(d);
  return out;
}

bool is_k_torsion_free(const Representation& m, int k) {
  if (k < 1) throw Error("bad-argument", "torsion-freeness needs k >= 1");
  AlgebraPtr op = opposite(m.alg);
  ExtTable ext = ext_table(transpose(m).rep, regular_module(op), k);
  for (int i = 1; i <= k; ++i)
    if (ext.dims[i] != 0) return false;
  return true;
}

DoubleDualSequence double_dual_sequence(const Representation& m) {
  const AlgebraPtr& alg = m.alg;
  AlgebraPtr op = opposite(alg);
  int nv = alg->quiver.vertex_count();

  StarModule sm = star_module(m);
  StarModule ssm = star_module(sm.rep);

  // One reversal matrix per ordered vertex pair, built on demand.
  std::vector<std::vector<std::optional<ExactMatrix>>> rev(
      nv, std::vector<std::optional<ExactMatrix>>(nv));
  auto reversal = [&](int j, int i) -> const ExactMatrix& {
    if (!rev[j][i]) rev[j][i] = reversal_matrix(alg, op, j, i);
    return *rev[j][i];
  };

  ModuleMap eta = zero_map(m, ssm.rep);
  for (int i = 0; i < nv; ++i) {
    Representation op_proj = make_proj_sum(op, {i}).rep;
    for (int p = 0; p < m.dims[i]; ++p) {
      // Evaluation at the p-th basis vector of M_i as a map M* -> P_op(i):
      // at vertex j it sends the class of phi to phi(m_p), rewritten in the
      // opposite path basis.
      ModuleMap eval = zero_map(sm.rep, op_proj);
      for (int j = 0; j < nv; ++j)
        for (int q = 0; q < sm.rep.dims[j]; ++q)
          eval.blocks[j].paste(
              sm.basis[j][q].blocks[i].row(p).mul(reversal(j, i)), q, 0);
      eta.blocks[i].paste(coords_in_basis(ssm.basis[i], eval), p, 0);
    }
  }
  if (auto err = validate_map(eta))
    throw Error("internal", "canonical double dual map is not a module map: " +
                                *err);

  DoubleDualSequence out;
  out.module = m;
  out.star = sm.rep;
  out.double_star = ssm.rep;
  out.e1 = map_kernel(eta).rep;
  out.e2 = map_cokernel(eta).rep;
  out.eta = std::move(eta);

  // The kernel and cokernel must match the extensions of the transpose
  // against the opposite algebra.
  ExtTable ext = ext_table(transpose(m).rep, regular_module(op), 2);
  if (out.e1.total_dim() != ext.dims[1] || out.e2.total_dim() != ext.dims[2])
    throw Error("internal",
                "double dual sequence disagrees with the transpose exts");
  return out;
}

bool is_m_spherical(const Representation& m, int spherical_m) {
  if (spherical_m < 1)
    throw Error("bad-argument", "sphericity needs m >= 1");
  DimResult pd = pdim(m, spherical_m);
  if (pd.above_cap) return false;
  if (spherical_m >= 2) {
    ExtTable ext =
        ext_table(m, regular_module(m.alg), spherical_m - 1);
    for (int i = 1; i <= spherical_m - 1; ++i)
      if (ext.dims[i] != 0) return false;
  }
  return true;
}

}  // namespace nab
