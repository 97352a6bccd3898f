#include "nabelian/representation.hpp"

namespace nab {

namespace {

// Row space of a vertexwise family as a submodule: bases[v] must be closed
// under the arrow actions. Returns the submodule and its inclusion.
SubQuot submodule_from_rows(const Representation& m,
                            std::vector<ExactMatrix> bases) {
  const Quiver& quiver = m.alg->quiver;
  Representation sub;
  sub.alg = m.alg;
  for (int v = 0; v < quiver.vertex_count(); ++v)
    sub.dims.push_back(bases[v].rows());
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    auto action = solve(bases[a.dst], bases[a.src].mul(m.arrow_maps[k]));
    if (!action)
      throw Error("internal", "rows do not span a submodule");
    sub.arrow_maps.push_back(std::move(*action));
  }
  ModuleMap incl = zero_map(sub, m);
  for (int v = 0; v < quiver.vertex_count(); ++v) incl.blocks[v] = bases[v];
  return {std::move(sub), std::move(incl)};
}

}  // namespace

SubQuot map_kernel(const ModuleMap& f) {
  std::vector<ExactMatrix> bases;
  for (const ExactMatrix& b : f.blocks) bases.push_back(kernel_basis(b));
  return submodule_from_rows(f.source, std::move(bases));
}

SubQuot map_cokernel(const ModuleMap& f) {
  const Representation& n = f.target;
  const Quiver& quiver = n.alg->quiver;
  Field field = n.alg->f();
  // Per vertex: RREF of the image; free (non-pivot) coordinates index the
  // quotient basis. projection[v] maps N_v onto the quotient, section[v]
  // splits it k-linearly by zeroing pivot coordinates.
  std::vector<ExactMatrix> projection, section;
  Representation coker;
  coker.alg = n.alg;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    RrefResult rr = rref(f.blocks[v]);
    int nv = n.dims[v];
    std::vector<bool> is_pivot(nv, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free;
    for (int c = 0; c < nv; ++c)
      if (!is_pivot[c]) free.push_back(c);
    int cv = static_cast<int>(free.size());
    coker.dims.push_back(cv);
    ExactMatrix pr(n.alg->field, nv, cv);
    for (int k = 0; k < cv; ++k) pr.set(free[k], k, field.one());
    for (int l = 0; l < rr.rank; ++l)
      for (int k = 0; k < cv; ++k)
        pr.set(rr.pivots[l], k, field.neg(rr.r.at(l, free[k])));
    ExactMatrix sec(n.alg->field, cv, nv);
    for (int k = 0; k < cv; ++k) sec.set(k, free[k], field.one());
    projection.push_back(std::move(pr));
    section.push_back(std::move(sec));
  }
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    coker.arrow_maps.push_back(
        section[a.src].mul(n.arrow_maps[k]).mul(projection[a.dst]));
  }
  ModuleMap proj = zero_map(n, coker);
  proj.blocks = std::move(projection);
  proj.target = coker;
  return {std::move(coker), std::move(proj)};
}

TopRadical top_radical(const Representation& m) {
  const Quiver& quiver = m.alg->quiver;
  // rad M = sum of arrow images.
  std::vector<ExactMatrix> rad_rows;
  for (int v = 0; v < quiver.vertex_count(); ++v)
    rad_rows.push_back(ExactMatrix(m.alg->field, 0, m.dims[v]));
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    int dst = quiver.arrows[k].dst;
    rad_rows[dst] = rad_rows[dst].vstack(m.arrow_maps[k]);
  }
  for (auto& rows : rad_rows) {
    RrefResult rr = rref(rows);
    rows = rr.r.slice(0, rr.rank, 0, rows.cols());
  }
  SubQuot rad = submodule_from_rows(m, std::move(rad_rows));
  SubQuot top = map_cokernel(rad.map);
  return {std::move(top.rep), std::move(rad.rep), std::move(top.map),
          std::move(rad.map)};
}

SubQuot socle(const Representation& m) {
  const Quiver& quiver = m.alg->quiver;
  std::vector<ExactMatrix> soc_rows;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    // Joint kernel of all outgoing arrow actions.
    ExactMatrix stacked(m.alg->field, m.dims[v], 0);
    for (int k = 0; k < quiver.arrow_count(); ++k)
      if (quiver.arrows[k].src == v)
        stacked = stacked.hstack(m.arrow_maps[k]);
    soc_rows.push_back(kernel_basis(stacked));
  }
  return submodule_from_rows(m, std::move(soc_rows));
}

Cover projective_cover(const Representation& m) {
  const Quiver& quiver = m.alg->quiver;
  TopRadical tr = top_radical(m);

  // One projective summand per top basis vector; lift each through a section
  // of the quotient map, in vertex order.
  std::vector<int> vertices;
  std::vector<ExactMatrix> lifts;  // row vectors in M at the summand's vertex
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    if (tr.top.dims[v] == 0) continue;
    // Rows of M_v projecting onto the standard basis of top_v: solve
    // X · quotient_block = I.
    auto x = solve(tr.quotient.blocks[v],
                   ExactMatrix::identity(m.alg->field, tr.top.dims[v]));
    if (!x) throw Error("internal", "quotient map is not surjective");
    for (int c = 0; c < tr.top.dims[v]; ++c) {
      vertices.push_back(v);
      lifts.push_back(x->row(c));
    }
  }

  ProjSum sum = make_proj_sum(m.alg, vertices);
  ModuleMap epi = zero_map(sum.rep, m);
  for (size_t s = 0; s < vertices.size(); ++s) {
    int v = vertices[s];
    for (int j = 0; j < quiver.vertex_count(); ++j) {
      const auto& paths = m.alg->paths_between[v][j];
      for (size_t pi = 0; pi < paths.size(); ++pi) {
        ExactMatrix img = lifts[s].mul(path_action(m, m.alg->basis[paths[pi]]));
        for (int q = 0; q < m.dims[j]; ++q)
          epi.blocks[j].set(sum.offsets[s][j] + static_cast<int>(pi), q,
                            img.at(0, q));
      }
    }
  }
  return {std::move(sum), std::move(epi)};
}

Envelope injective_envelope(const Representation& m) {
  Cover c = projective_cover(k_dual(m));
  Envelope e;
  ModuleMap mono = dual_map(c.epi);  // D(DM) -> D(P), with D(DM) = M
  mono.source = m;
  e.mono = std::move(mono);
  e.inj = e.mono.target;
  return e;
}

bool is_projective(const Representation& m) {
  Cover c = projective_cover(m);
  return map_kernel(c.epi).rep.total_dim() == 0;
}

bool is_injective(const Representation& m) {
  Envelope e = injective_envelope(m);
  return map_cokernel(e.mono).rep.total_dim() == 0;
}

}  // namespace nab
