#include "nabelian/projmatrix.hpp"

#include <sstream>

namespace nab {

ProjMatrix pm_zero(AlgebraPtr alg, std::vector<int> row_vertices,
                   std::vector<int> col_vertices) {
  ProjMatrix m;
  m.alg = std::move(alg);
  m.row_vertices = std::move(row_vertices);
  m.col_vertices = std::move(col_vertices);
  m.entries.assign(m.row_vertices.size() * m.col_vertices.size(), AlgElem{});
  return m;
}

ProjMatrix pm_identity(AlgebraPtr alg, std::vector<int> vertices) {
  ProjMatrix m = pm_zero(alg, vertices, vertices);
  for (size_t k = 0; k < vertices.size(); ++k)
    m.at(static_cast<int>(k), static_cast<int>(k)) =
        m.alg->idempotent(vertices[k]);
  return m;
}

void pm_validate(const ProjMatrix& m) {
  for (int v : m.row_vertices)
    if (v < 0 || v >= m.alg->quiver.vertex_count())
      throw Error("bad-projmatrix", "row vertex out of range");
  for (int v : m.col_vertices)
    if (v < 0 || v >= m.alg->quiver.vertex_count())
      throw Error("bad-projmatrix", "column vertex out of range");
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& [p, coeff] : m.at(r, c)) {
        (void)coeff;
        if (p.source != m.col_vertices[c] || p.target != m.row_vertices[r])
          throw Error("bad-projmatrix",
                      "entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") has a term with wrong endpoints");
      }
}

ProjMatrix pm_compose(const ProjMatrix& f, const ProjMatrix& g) {
  if (f.alg.get() != g.alg.get() && !f.alg->same_presentation(*g.alg))
    throw Error("bad-projmatrix", "composition across different algebras");
  if (f.col_vertices != g.row_vertices)
    throw Error("bad-projmatrix", "composition with mismatched middle term");
  ProjMatrix h = pm_zero(f.alg, f.row_vertices, g.col_vertices);
  Field ff = f.alg->f();
  for (int r = 0; r < f.rows(); ++r)
    for (int d = 0; d < g.cols(); ++d) {
      AlgElem sum;
      for (int c = 0; c < f.cols(); ++c)
        sum = elem_add(ff, sum, f.alg->mul(g.at(c, d), f.at(r, c)));
      h.at(r, d) = std::move(sum);
    }
  return h;
}

bool pm_eq(const ProjMatrix& a, const ProjMatrix& b) {
  if (a.row_vertices != b.row_vertices || a.col_vertices != b.col_vertices)
    return false;
  Field f = a.alg->f();
  for (size_t k = 0; k < a.entries.size(); ++k)
    if (!elem_eq(f, a.entries[k], b.entries[k])) return false;
  return true;
}

bool pm_is_zero(const ProjMatrix& a) {
  for (const AlgElem& e : a.entries)
    if (!e.empty()) return false;
  return true;
}

ProjMatrix dual_projmatrix(const ProjMatrix& f) {
  AlgebraPtr op = opposite(f.alg);
  ProjMatrix d = pm_zero(op, f.col_vertices, f.row_vertices);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      d.at(c, r) = reverse_elem(*f.alg, *op, f.at(r, c));
  return d;
}

std::string pm_to_string(const ProjMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out << "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      out << m.alg->elem_to_string(m.at(r, c));
    }
  }
  out << "]";
  return out.str();
}

}  // namespace nab
