#include "nabelian/representation.hpp"

#include <numeric>

namespace nab {

int Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation zero_module(AlgebraPtr alg) {
  Representation m;
  m.dims.assign(alg->quiver.vertex_count(), 0);
  m.arrow_maps.assign(alg->quiver.arrows.size(), ExactMatrix(alg->field, 0, 0));
  m.alg = std::move(alg);
  return m;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  Representation m;
  m.alg = a.alg;
  for (int v = 0; v < a.alg->quiver.vertex_count(); ++v)
    m.dims.push_back(a.dims[v] + b.dims[v]);
  for (int k = 0; k < a.alg->quiver.arrow_count(); ++k) {
    const Arrow& ar = a.alg->quiver.arrows[k];
    ExactMatrix block(a.alg->field, m.dims[ar.src], m.dims[ar.dst]);
    block.paste(a.arrow_maps[k], 0, 0);
    block.paste(b.arrow_maps[k], a.dims[ar.src], a.dims[ar.dst]);
    m.arrow_maps.push_back(std::move(block));
  }
  return m;
}

bool rep_eq(const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return false;
  for (size_t k = 0; k < a.arrow_maps.size(); ++k)
    if (!a.arrow_maps[k].eq(b.arrow_maps[k])) return false;
  return true;
}

bool rep_is_zero(const Representation& a) { return a.total_dim() == 0; }

std::optional<std::string> validate(const Representation& m) {
  const auto& quiver = m.alg->quiver;
  if (static_cast<int>(m.dims.size()) != quiver.vertex_count())
    return "dimension vector has the wrong length";
  if (static_cast<int>(m.arrow_maps.size()) != quiver.arrow_count())
    return "wrong number of arrow matrices";
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    if (m.arrow_maps[k].rows() != m.dims[a.src] ||
        m.arrow_maps[k].cols() != m.dims[a.dst])
      return "arrow '" + a.label + "' has matrix shape " +
             std::to_string(m.arrow_maps[k].rows()) + "x" +
             std::to_string(m.arrow_maps[k].cols()) + ", expected " +
             std::to_string(m.dims[a.src]) + "x" + std::to_string(m.dims[a.dst]);
  }
  // The ideal acts by zero iff the completed relations do.
  for (const AlgElem& rel : m.alg->groebner.elems) {
    const Path& lead = std::prev(rel.end())->first;
    ExactMatrix total(m.alg->field, m.dims[lead.source], m.dims[lead.target]);
    for (const auto& [p, c] : rel)
      total = total.add(path_action(m, p).scaled(c));
    if (!total.is_zero())
      return "relation " + m.alg->elem_to_string(rel) +
             " does not act by zero";
  }
  return std::nullopt;
}

ExactMatrix path_action(const Representation& m, const Path& p) {
  ExactMatrix acc = ExactMatrix::identity(m.alg->field, m.dims[p.source]);
  for (int a : p.arrows) acc = acc.mul(m.arrow_maps[a]);
  return acc;
}

ExactMatrix elem_action(const Representation& m, const AlgElem& x, int src,
                        int dst) {
  ExactMatrix acc(m.alg->field, m.dims[src], m.dims[dst]);
  for (const auto& [p, c] : x) {
    if (p.source != src || p.target != dst)
      throw Error("bad-element", "element action with mismatched endpoints");
    acc = acc.add(path_action(m, p).scaled(c));
  }
  return acc;
}

std::optional<std::string> validate_map(const ModuleMap& f) {
  const auto& quiver = f.source.alg->quiver;
  if (static_cast<int>(f.blocks.size()) != quiver.vertex_count())
    return "wrong number of blocks";
  for (int v = 0; v < quiver.vertex_count(); ++v)
    if (f.blocks[v].rows() != f.source.dims[v] ||
        f.blocks[v].cols() != f.target.dims[v])
      return "block at vertex " + quiver.vertices[v] + " has the wrong shape";
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    ExactMatrix lhs = f.source.arrow_maps[k].mul(f.blocks[a.dst]);
    ExactMatrix rhs = f.blocks[a.src].mul(f.target.arrow_maps[k]);
    if (!lhs.eq(rhs)) return "blocks do not commute with arrow '" + a.label + "'";
  }
  return std::nullopt;
}

ModuleMap zero_map(Representation src, Representation dst) {
  ModuleMap f;
  for (int v = 0; v < src.alg->quiver.vertex_count(); ++v)
    f.blocks.push_back(ExactMatrix(src.alg->field, src.dims[v], dst.dims[v]));
  f.source = std::move(src);
  f.target = std::move(dst);
  return f;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  f.source = m;
  f.target = m;
  for (int v = 0; v < m.alg->quiver.vertex_count(); ++v)
    f.blocks.push_back(ExactMatrix::identity(m.alg->field, m.dims[v]));
  return f;
}

ModuleMap compose_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  h.source = f.source;
  h.target = g.target;
  for (size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks.push_back(f.blocks[v].mul(g.blocks[v]));
  return h;
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (size_t v = 0; v < f.blocks.size(); ++v)
    h.blocks[v] = f.blocks[v].add(g.blocks[v]);
  return h;
}

ModuleMap map_scaled(const ModuleMap& f, const Scalar& s) {
  ModuleMap h = f;
  for (auto& b : h.blocks) b = b.scaled(s);
  return h;
}

bool map_eq(const ModuleMap& f, const ModuleMap& g) {
  if (f.blocks.size() != g.blocks.size()) return false;
  for (size_t v = 0; v < f.blocks.size(); ++v)
    if (!f.blocks[v].eq(g.blocks[v])) return false;
  return true;
}

bool map_is_zero(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

std::vector<ModuleMap> hom_basis(const Representation& m,
                                 const Representation& n) {
  if (m.alg.get() != n.alg.get() && !m.alg->same_presentation(*n.alg))
    throw Error("bad-map", "Hom between modules over different algebras");
  const Quiver& quiver = m.alg->quiver;
  Field f = m.alg->f();

  // Unknowns: all block entries, laid out vertex by vertex, row-major.
  std::vector<int> var_offset(quiver.vertex_count() + 1, 0);
  for (int v = 0; v < quiver.vertex_count(); ++v)
    var_offset[v + 1] = var_offset[v] + m.dims[v] * n.dims[v];
  int unknowns = var_offset.back();

  // Equations: for each arrow a: i -> j and each position (p, q),
  //   sum_r M_a[p,r]·B_j[r,q] - sum_s B_i[p,s]·N_a[s,q] = 0.
  int equations = 0;
  for (int k = 0; k < quiver.arrow_count(); ++k)
    equations += m.dims[quiver.arrows[k].src] * n.dims[quiver.arrows[k].dst];

  ExactMatrix system(m.alg->field, unknowns, equations);
  int eq = 0;
  for (int k = 0; k < quiver.arrow_count(); ++k) {
    const Arrow& a = quiver.arrows[k];
    const ExactMatrix& ma = m.arrow_maps[k];
    const ExactMatrix& na = n.arrow_maps[k];
    for (int p = 0; p < m.dims[a.src]; ++p)
      for (int q = 0; q < n.dims[a.dst]; ++q) {
        for (int r = 0; r < m.dims[a.dst]; ++r) {
          int var = var_offset[a.dst] + r * n.dims[a.dst] + q;
          system.set(var, eq, f.add(system.at(var, eq), ma.at(p, r)));
        }
        for (int s = 0; s < n.dims[a.src]; ++s) {
          int var = var_offset[a.src] + p * n.dims[a.src] + s;
          system.set(var, eq, f.sub(system.at(var, eq), na.at(s, q)));
        }
        ++eq;
      }
  }

  ExactMatrix sols = kernel_basis(system);
  std::vector<ModuleMap> out;
  for (int r = 0; r < sols.rows(); ++r) {
    ModuleMap mm = zero_map(m, n);
    for (int v = 0; v < quiver.vertex_count(); ++v)
      for (int p = 0; p < m.dims[v]; ++p)
        for (int q = 0; q < n.dims[v]; ++q)
          mm.blocks[v].set(p, q, sols.at(r, var_offset[v] + p * n.dims[v] + q));
    out.push_back(std::move(mm));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

std::optional<ModuleMap> find_isomorphism(const Representation& m,
                                          const Representation& n,
                                          std::uint64_t seed) {
  if (m.dims != n.dims) return std::nullopt;
  std::vector<ModuleMap> basis = hom_basis(m, n);
  if (basis.empty()) {
    if (m.total_dim() == 0) return zero_map(m, n);
    return std::nullopt;
  }
  Field f = m.alg->f();
  auto invertible = [&](const ModuleMap& g) {
    for (const auto& b : g.blocks)
      if (!is_invertible(b)) return false;
    return true;
  };
  for (const ModuleMap& g : basis)
    if (invertible(g)) return g;

  bool small_field = m.alg->field.kind == FieldSpec::Kind::PrimeField &&
                     m.alg->field.characteristic < 5;
  if (small_field) {
    // Exhaustive coefficient search when feasible, else random sampling.
    std::uint64_t p = m.alg->field.characteristic;
    double combos = 1;
    for (size_t k = 0; k < basis.size() && combos < 2e5; ++k) combos *= static_cast<double>(p);
    if (combos < 2e5) {
      std::vector<std::uint64_t> c(basis.size(), 0);
      while (true) {
        size_t pos = 0;
        while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
        if (pos == c.size()) break;
        ModuleMap g = zero_map(m, n);
        for (size_t k = 0; k < basis.size(); ++k)
          if (c[k])
            g = map_add(g, map_scaled(basis[k], f.from_long(static_cast<long>(c[k]))));
        if (invertible(g)) return g;
      }
      return std::nullopt;
    }
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    ModuleMap g = zero_map(m, n);
    for (const ModuleMap& b : basis) {
      long c = static_cast<long>(rng() % 11) - 5;
      if (c) g = map_add(g, map_scaled(b, f.from_long(c)));
    }
    if (invertible(g)) return g;
  }
  return std::nullopt;
}

bool isomorphic(const Representation& m, const Representation& n) {
  return find_isomorphism(m, n).has_value();
}

}  // namespace nab
