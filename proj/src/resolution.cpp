#include "nabelian/homology.hpp"

namespace nab {

Representation regular_module(const AlgebraPtr& a) {
  Representation reg = zero_module(a);
  for (int v = 0; v < a->quiver.vertex_count(); ++v)
    reg = direct_sum(reg, standard_module(a, StandardKind::Projective, v));
  return reg;
}

Resolution minimal_resolution(const Representation& m, int length) {
  Resolution res;
  res.module = m;
  Cover cover = projective_cover(m);
  res.terms.push_back(cover.proj);
  res.augmentation = cover.epi;
  SubQuot syzygy = map_kernel(cover.epi);
  for (int i = 1; i <= length; ++i) {
    if (syzygy.rep.total_dim() == 0) {
      res.complete = true;
      return res;
    }
    Cover next = projective_cover(syzygy.rep);
    ModuleMap d = compose_maps(next.epi, syzygy.map);
    res.differentials.push_back(
        extract_projmatrix(d, next.proj, res.terms.back()));
    res.terms.push_back(next.proj);
    syzygy = map_kernel(next.epi);
  }
  res.complete = syzygy.rep.total_dim() == 0;
  return res;
}

void verify_resolution(const Resolution& r) {
  // Augmentation is epi and d_1 maps onto its kernel; higher degrees by rank
  // bookkeeping dim ker(d_i) = rank(d_{i+1}) with the complex property.
  const AlgebraPtr& alg = r.module.alg;
  int nv = alg->quiver.vertex_count();
  for (int v = 0; v < nv; ++v)
    if (rank(r.augmentation.blocks[v]) != r.module.dims[v])
      throw Error("internal", "augmentation is not surjective");

  std::vector<ModuleMap> maps;  // realized differentials
  for (int i = 0; i < r.length(); ++i)
    maps.push_back(
        realize_projmatrix(r.differentials[i], r.terms[i + 1], r.terms[i]));

  for (int i = 0; i < r.length(); ++i) {
    const ModuleMap& d = maps[i];
    const ModuleMap& into =
        i == 0 ? r.augmentation : maps[i - 1];  // d_i then (d_{i-1} or aug)
    if (!map_is_zero(compose_maps(d, into)))
      throw Error("internal", "resolution is not a complex");
    SubQuot ker = map_kernel(into);
    for (int v = 0; v < nv; ++v)
      if (rank(d.blocks[v]) != ker.rep.dims[v])
        throw Error("internal", "resolution is not exact");
  }
  if (r.complete) {
    const ModuleMap& last = r.length() ? maps.back() : r.augmentation;
    if (map_kernel(last).rep.total_dim() != 0)
      throw Error("internal", "resolution marked complete with nonzero syzygy");
  }
  if (r.minimal)
    for (const ProjMatrix& d : r.differentials)
      for (const AlgElem& entry : d.entries)
        for (const auto& [p, c] : entry) {
          (void)c;
          if (p.trivial())
            throw Error("internal", "differential entry outside the radical");
        }
}

DimResult pdim(const Representation& m, int cap) {
  Resolution r = minimal_resolution(m, cap);
  if (!r.complete) return {cap, true};
  return {r.length(), false};
}

DimResult gldim(const AlgebraPtr& a, int cap) {
  DimResult out{0, false};
  for (int v = 0; v < a->quiver.vertex_count(); ++v) {
    DimResult p = pdim(standard_module(a, StandardKind::Simple, v), cap);
    if (p.above_cap) return {cap, true};
    out.value = std::max(out.value, p.value);
  }
  return out;
}

int default_dim_cap(const AlgebraPtr& a) { return a->dim + 2; }

}  // namespace nab
