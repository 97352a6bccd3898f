#include "nabelian/representation.hpp"

namespace nab {

namespace {

Representation simple_module(const AlgebraPtr& alg, int vertex) {
  Representation m;
  m.alg = alg;
  m.dims.assign(alg->quiver.vertex_count(), 0);
  m.dims[vertex] = 1;
  for (const Arrow& a : alg->quiver.arrows)
    m.arrow_maps.push_back(ExactMatrix(alg->field, m.dims[a.src], m.dims[a.dst]));
  return m;
}

// P(i) = e_i Λ: the space at vertex j has the paths i -> j as basis, arrows
// act by right concatenation followed by normal form.
Representation projective_module(const AlgebraPtr& alg, int vertex) {
  Representation m;
  m.alg = alg;
  const Quiver& quiver = alg->quiver;
  Field f = alg->f();
  for (int j = 0; j < quiver.vertex_count(); ++j)
    m.dims.push_back(static_cast<int>(alg->paths_between[vertex][j].size()));
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    const auto& rows_paths = alg->paths_between[vertex][a.src];
    const auto& cols_paths = alg->paths_between[vertex][a.dst];
    ExactMatrix block(alg->field, m.dims[a.src], m.dims[a.dst]);
    Path arrow_path{a.src, a.dst, {k}};
    for (size_t r = 0; r < rows_paths.size(); ++r) {
      AlgElem image = alg->mul(AlgElem{{alg->basis[rows_paths[r]], f.one()}},
                               AlgElem{{arrow_path, f.one()}});
      for (const auto& [p, c] : image) {
        int idx = alg->basis_index(p);
        for (size_t col = 0; col < cols_paths.size(); ++col)
          if (cols_paths[col] == idx) block.set(static_cast<int>(r), static_cast<int>(col), c);
      }
    }
    m.arrow_maps.push_back(std::move(block));
  }
  return m;
}

}  // namespace

Representation k_dual(const Representation& m) {
  Representation d;
  d.alg = opposite(m.alg);
  d.dims = m.dims;
  for (const ExactMatrix& a : m.arrow_maps)
    d.arrow_maps.push_back(a.transpose());
  return d;
}

ModuleMap dual_map(const ModuleMap& f) {
  ModuleMap d;
  d.source = k_dual(f.target);
  d.target = k_dual(f.source);
  for (const ExactMatrix& b : f.blocks) d.blocks.push_back(b.transpose());
  return d;
}

Representation standard_module(const AlgebraPtr& alg, StandardKind kind,
                               int vertex) {
  if (vertex < 0 || vertex >= alg->quiver.vertex_count())
    throw Error("bad-vertex", "unknown vertex");
  switch (kind) {
    case StandardKind::Simple:
      return simple_module(alg, vertex);
    case StandardKind::Projective:
      return projective_module(alg, vertex);
    case StandardKind::Injective:
      return k_dual(standard_module(opposite(alg), StandardKind::Projective, vertex));
  }
  throw Error("internal", "unreachable");
}

ProjSum make_proj_sum(const AlgebraPtr& alg, std::vector<int> vertices) {
  ProjSum s;
  s.alg = alg;
  s.vertices = std::move(vertices);
  s.rep = zero_module(alg);
  int nv = alg->quiver.vertex_count();
  for (int v : s.vertices) {
    std::vector<int> offs;
    for (int j = 0; j < nv; ++j) offs.push_back(s.rep.dims[j]);
    s.offsets.push_back(std::move(offs));
    s.rep = direct_sum(s.rep, standard_module(alg, StandardKind::Projective, v));
  }
  return s;
}

ModuleMap realize_projmatrix(const ProjMatrix& m, const ProjSum& src,
                             const ProjSum& dst) {
  if (m.row_vertices != src.vertices || m.col_vertices != dst.vertices)
    throw Error("bad-projmatrix", "sums do not match the matrix shape");
  const AlgebraPtr& alg = m.alg;
  Field f = alg->f();
  ModuleMap out = zero_map(src.rep, dst.rep);
  int nv = alg->quiver.vertex_count();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const AlgElem& entry = m.at(r, c);
      if (entry.empty()) continue;
      int vr = m.row_vertices[r];
      // Generator of summand r maps to entry(r,c) in summand c; a basis path
      // p: vr -> j maps to entry·p expanded in the paths of the target.
      for (int j = 0; j < nv; ++j) {
        const auto& src_paths = alg->paths_between[vr][j];
        const auto& dst_paths = alg->paths_between[m.col_vertices[c]][j];
        for (size_t pi = 0; pi < src_paths.size(); ++pi) {
          AlgElem image = alg->mul(entry, AlgElem{{alg->basis[src_paths[pi]], f.one()}});
          for (const auto& [q, coeff] : image) {
            int idx = alg->basis_index(q);
            for (size_t qi = 0; qi < dst_paths.size(); ++qi)
              if (dst_paths[qi] == idx)
                out.blocks[j].set(src.offsets[r][j] + static_cast<int>(pi),
                                  dst.offsets[c][j] + static_cast<int>(qi), coeff);
          }
        }
      }
    }
  return out;
}

ProjMatrix extract_projmatrix(const ModuleMap& f, const ProjSum& src,
                              const ProjSum& dst) {
  ProjMatrix m = pm_zero(src.alg, src.vertices, dst.vertices);
  const AlgebraPtr& alg = src.alg;
  // Read off generator images: the generator of summand r is the trivial
  // path, sitting at its offset in the space at its own vertex.
  for (int r = 0; r < m.rows(); ++r) {
    int vr = src.vertices[r];
    const auto& gen_paths = alg->paths_between[vr][vr];
    int gen_pos = -1;
    for (size_t k = 0; k < gen_paths.size(); ++k)
      if (alg->basis[gen_paths[k]].trivial()) gen_pos = static_cast<int>(k);
    int row = src.offsets[r][vr] + gen_pos;
    for (int c = 0; c < m.cols(); ++c) {
      const auto& dst_paths = alg->paths_between[dst.vertices[c]][vr];
      AlgElem entry;
      for (size_t qi = 0; qi < dst_paths.size(); ++qi) {
        const Scalar& coeff =
            f.blocks[vr].at(row, dst.offsets[c][vr] + static_cast<int>(qi));
        if (!alg->f().is_zero(coeff))
          entry.emplace(alg->basis[dst_paths[qi]], coeff);
      }
      m.at(r, c) = std::move(entry);
    }
  }
  return m;
}

}  // namespace nab
