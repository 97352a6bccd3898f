#include "nabelian/homology.hpp"

namespace nab {

namespace {

// Yoneda coordinates of Hom(⊕P(v_r), N): the direct sum of the N_{v_r}.
int yoneda_dim(const Representation& n, const std::vector<int>& vertices) {
  int d = 0;
  for (int v : vertices) d += n.dims[v];
  return d;
}

// Precomposition with d: Hom(P_{i-1}, N) -> Hom(P_i, N) in Yoneda
// coordinates; the (c, r) block is the right action of entry(r, c).
ExactMatrix hom_complex_map(const ProjMatrix& d, const Representation& n) {
  std::vector<int> src_off(d.cols() + 1, 0);
  for (int c = 0; c < d.cols(); ++c)
    src_off[c + 1] = src_off[c] + n.dims[d.col_vertices[c]];
  std::vector<int> dst_off(d.rows() + 1, 0);
  for (int r = 0; r < d.rows(); ++r)
    dst_off[r + 1] = dst_off[r] + n.dims[d.row_vertices[r]];
  ExactMatrix out(n.alg->field, src_off.back(), dst_off.back());
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c) {
      const AlgElem& entry = d.at(r, c);
      if (entry.empty()) continue;
      ExactMatrix block =
          elem_action(n, entry, d.col_vertices[c], d.row_vertices[r]);
      out.paste(block, src_off[c], dst_off[r]);
    }
  return out;
}

// entry acts on N (a module over the opposite algebra) from the left; as a
// map N_{src} -> N_{dst} it is the opposite-action of the reversed element.
ExactMatrix left_action_on_op_module(const AlgebraPtr& alg,
                                     const Representation& n,
                                     const AlgElem& entry, int src, int dst) {
  AlgElem rev = reverse_elem(*alg, *n.alg, entry);
  return elem_action(n, rev, src, dst);
}

// Tensor-side complex map P_i ⊗ N -> P_{i-1} ⊗ N under P(v) ⊗ N = N_v.
ExactMatrix tor_complex_map(const ProjMatrix& d, const Representation& n) {
  std::vector<int> src_off(d.rows() + 1, 0);
  for (int r = 0; r < d.rows(); ++r)
    src_off[r + 1] = src_off[r] + n.dims[d.row_vertices[r]];
  std::vector<int> dst_off(d.cols() + 1, 0);
  for (int c = 0; c < d.cols(); ++c)
    dst_off[c + 1] = dst_off[c] + n.dims[d.col_vertices[c]];
  ExactMatrix out(n.alg->field, src_off.back(), dst_off.back());
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c) {
      const AlgElem& entry = d.at(r, c);
      if (entry.empty()) continue;
      ExactMatrix block = left_action_on_op_module(
          d.alg, n, entry, d.row_vertices[r], d.col_vertices[c]);
      out.paste(block, src_off[r], dst_off[c]);
    }
  return out;
}

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.alg.get() != n.alg.get() && !m.alg->same_presentation(*n.alg))
    throw Error("bad-map", "modules live over different algebras");
}

}  // namespace

ExtTable ext_table(const Representation& m, const Representation& n, int cap) {
  require_same_algebra(m, n);
  Resolution res = minimal_resolution(m, cap + 1);
  ExtTable out;
  std::vector<int> dims;  // Yoneda dims of Hom(P_i, N)
  for (const ProjSum& t : res.terms) dims.push_back(yoneda_dim(n, t.vertices));
  std::vector<int> ranks(res.length() + 2, 0);  // ranks[i] = rank δ_i
  for (int i = 1; i <= res.length(); ++i)
    ranks[i] = rank(hom_complex_map(res.differentials[i - 1], n));
  for (int i = 0; i <= cap; ++i) {
    int ci = i < static_cast<int>(dims.size()) ? dims[i] : 0;
    int r_in = i + 1 <= res.length() ? ranks[i + 1] : 0;
    int r_out = i >= 1 && i <= res.length() ? ranks[i] : 0;
    out.dims.push_back(ci - r_in - r_out);
  }
  return out;
}

std::vector<Representation> ext_modules_against_algebra(const Representation& m,
                                                        int cap) {
  const AlgebraPtr& alg = m.alg;
  AlgebraPtr op = opposite(alg);
  Resolution res = minimal_resolution(m, cap + 1);

  // Dualize: P*_0 -> P*_1 -> ... over the opposite algebra.
  std::vector<ProjSum> sums;
  for (const ProjSum& t : res.terms) sums.push_back(make_proj_sum(op, t.vertices));
  std::vector<ModuleMap> maps;  // maps[i]: P*_i -> P*_{i+1}
  for (int i = 0; i < res.length(); ++i)
    maps.push_back(realize_projmatrix(dual_projmatrix(res.differentials[i]),
                                      sums[i], sums[i + 1]));

  std::vector<Representation> out;
  for (int i = 0; i <= cap; ++i) {
    if (i >= static_cast<int>(sums.size())) {
      out.push_back(zero_module(op));
      continue;
    }
    // Kernel of the outgoing map (whole term when there is none).
    SubQuot ker = i < static_cast<int>(maps.size())
                      ? map_kernel(maps[i])
                      : SubQuot{sums[i].rep, identity_map(sums[i].rep)};
    if (i == 0) {
      out.push_back(ker.rep);
      continue;
    }
    // Factor the incoming map through the kernel and take its cokernel.
    const ModuleMap& in = maps[i - 1];
    ModuleMap factored = zero_map(in.source, ker.rep);
    for (size_t v = 0; v < factored.blocks.size(); ++v) {
      auto x = solve(ker.map.blocks[v], in.blocks[v]);
      if (!x) throw Error("internal", "image does not lie in the kernel");
      factored.blocks[v] = std::move(*x);
    }
    out.push_back(map_cokernel(factored).rep);
  }
  return out;
}

TensorResult tensor(const Representation& m, const Representation& n) {
  const AlgebraPtr& alg = m.alg;
  if (opposite(alg).get() != n.alg.get() &&
      !opposite(alg)->same_presentation(*n.alg))
    throw Error("bad-map", "tensor needs a left module (module over the opposite)");
  const Quiver& quiver = alg->quiver;
  Field f = alg->f();

  TensorResult out;
  out.offsets.assign(quiver.vertex_count() + 1, 0);
  for (int v = 0; v < quiver.vertex_count(); ++v)
    out.offsets[v + 1] = out.offsets[v] + m.dims[v] * n.dims[v];
  int ambient = out.offsets.back();

  // Relation rows (m·a) ⊗ n - m ⊗ (a·n) for each arrow a: i -> j; the left
  // action of a on N is the opposite action of its reversed arrow.
  std::vector<ExactMatrix> rel_rows;
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    const ExactMatrix& ma = m.arrow_maps[k];
    const ExactMatrix& na = n.arrow_maps[k];  // N_{a.dst} -> N_{a.src} over op
    for (int p = 0; p < m.dims[a.src]; ++p)
      for (int q = 0; q < n.dims[a.dst]; ++q) {
        ExactMatrix row(alg->field, 1, ambient);
        for (int r = 0; r < m.dims[a.dst]; ++r)
          row.set(0, out.offsets[a.dst] + r * n.dims[a.dst] + q, ma.at(p, r));
        for (int s = 0; s < n.dims[a.src]; ++s)
          row.set(0, out.offsets[a.src] + p * n.dims[a.src] + s,
                  f.neg(na.at(q, s)));
        rel_rows.push_back(std::move(row));
      }
  }
  ExactMatrix rel(alg->field, 0, ambient);
  for (const ExactMatrix& r : rel_rows) rel = rel.vstack(r);

  RrefResult rr = rref(rel);
  std::vector<bool> is_pivot(ambient, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);
  out.dim = static_cast<int>(free.size());
  out.projection = ExactMatrix(alg->field, ambient, out.dim);
  for (size_t k = 0; k < free.size(); ++k)
    out.projection.set(free[k], static_cast<int>(k), f.one());
  for (int l = 0; l < rr.rank; ++l)
    for (size_t k = 0; k < free.size(); ++k)
      out.projection.set(rr.pivots[l], static_cast<int>(k),
                         f.neg(rr.r.at(l, free[k])));
  return out;
}

std::vector<int> tor_table(const Representation& m, const Representation& n,
                           int cap) {
  Resolution res = minimal_resolution(m, cap + 1);
  std::vector<int> dims;
  for (const ProjSum& t : res.terms) dims.push_back(yoneda_dim(n, t.vertices));
  std::vector<int> ranks(res.length() + 2, 0);
  for (int i = 1; i <= res.length(); ++i)
    ranks[i] = rank(tor_complex_map(res.differentials[i - 1], n));
  std::vector<int> out;
  for (int i = 0; i <= cap; ++i) {
    int ci = i < static_cast<int>(dims.size()) ? dims[i] : 0;
    int r_in = i + 1 <= res.length() ? ranks[i + 1] : 0;
    int r_out = i >= 1 && i <= res.length() ? ranks[i] : 0;
    out.push_back(ci - r_in - r_out);
  }
  return out;
}

int stable_hom_dim(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  std::vector<ModuleMap> homs = hom_basis(m, n);
  if (homs.empty()) return 0;
  Cover cover = projective_cover(n);
  std::vector<ModuleMap> lifts = hom_basis(m, cover.proj.rep);

  // Coordinates of a map m -> n: concatenated block entries.
  int coords = 0;
  for (size_t v = 0; v < homs[0].blocks.size(); ++v)
    coords += m.dims[v] * n.dims[v];
  auto flatten = [&](const ModuleMap& f) {
    ExactMatrix row(m.alg->field, 1, coords);
    int pos = 0;
    for (const ExactMatrix& b : f.blocks)
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) row.set(0, pos++, b.at(p, q));
    return row;
  };

  ExactMatrix factorable(m.alg->field, 0, coords);
  for (const ModuleMap& l : lifts)
    factorable = factorable.vstack(flatten(compose_maps(l, cover.epi)));
  return static_cast<int>(homs.size()) - rank(factorable);
}

DomdimResult domdim(const AlgebraPtr& a, int cap) {
  AlgebraPtr op = opposite(a);
  Representation dual_regular = k_dual(regular_module(a));
  Resolution res = minimal_resolution(dual_regular, cap);

  // I^i = D(Q_i); it is projective iff I(v) is projective for every summand
  // vertex v of Q_i.
  std::vector<int> injective_is_projective(a->quiver.vertex_count(), -1);
  auto term_projective = [&](const ProjSum& q) {
    for (int v : q.vertices) {
      if (injective_is_projective[v] < 0)
        injective_is_projective[v] =
            is_projective(standard_module(a, StandardKind::Injective, v)) ? 1 : 0;
      if (!injective_is_projective[v]) return false;
    }
    return true;
  };

  int count = 0;
  for (const ProjSum& q : res.terms) {
    if (!term_projective(q)) return {DomdimResult::Kind::Finite, count};
    ++count;
  }
  if (res.complete) return {DomdimResult::Kind::Infinite, count};
  return {DomdimResult::Kind::AtLeastCap, count};
}

GradeResult grade(const Representation& m, int cap) {
  if (m.total_dim() == 0) return {true, 0, true};
  Representation reg = regular_module(m.alg);
  ExtTable ext = ext_table(m, reg, cap);
  for (int i = 0; i <= cap; ++i)
    if (ext.dims[i] > 0) return {false, i, true};
  DimResult pd = pdim(m, cap);
  if (!pd.above_cap)
    throw Error("internal",
                "nonzero module with finite projective dimension has no Ext "
                "against the algebra");
  return {true, 0, false};
}

}  // namespace nab
