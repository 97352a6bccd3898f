#include "nabelian/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nab {

AlgElem BoundQuiverAlgebra::idempotent(int vertex) const {
  return AlgElem{{Path::trivial_at(vertex), f().one()}};
}

AlgElem BoundQuiverAlgebra::one() const {
  AlgElem x;
  for (int v = 0; v < quiver.vertex_count(); ++v)
    x.emplace(Path::trivial_at(v), f().one());
  return x;
}

int BoundQuiverAlgebra::basis_index(const Path& p) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), p,
                             [](const Path& a, const Path& b) {
                               return PathLess{}(a, b);
                             });
  if (it == basis.end() || !(*it == p)) return -1;
  return static_cast<int>(it - basis.begin());
}

ExactMatrix BoundQuiverAlgebra::elem_row(const AlgElem& x) const {
  ExactMatrix m(field, 1, dim);
  for (const auto& [p, c] : x) {
    int k = basis_index(p);
    if (k < 0) throw Error("bad-element", "element not in normal form");
    m.set(0, k, c);
  }
  return m;
}

AlgElem BoundQuiverAlgebra::row_elem(const ExactMatrix& m, int r) const {
  AlgElem x;
  Field ff = f();
  for (int k = 0; k < dim; ++k)
    if (!ff.is_zero(m.at(r, k))) x.emplace(basis[k], m.at(r, k));
  return x;
}

std::string BoundQuiverAlgebra::elem_to_string(const AlgElem& x) const {
  if (x.empty()) return "0";
  Field ff = f();
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : x) {
    std::string coeff = ff.to_string(c);
    if (!first) out << " + ";
    first = false;
    if (coeff != "1") out << coeff << "*";
    out << path_to_string(quiver, p);
  }
  return out.str();
}

bool BoundQuiverAlgebra::same_presentation(const BoundQuiverAlgebra& o) const {
  if (!(field == o.field) || dim != o.dim) return false;
  if (quiver.vertices != o.quiver.vertices) return false;
  if (quiver.arrow_count() != o.quiver.arrow_count()) return false;
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow &x = quiver.arrows[a], &y = o.quiver.arrows[a];
    if (x.label != y.label || x.src != y.src || x.dst != y.dst) return false;
  }
  if (basis.size() != o.basis.size()) return false;
  for (size_t k = 0; k < basis.size(); ++k)
    if (!(basis[k] == o.basis[k])) return false;
  return true;
}

namespace {

// Arrow-ideal nilpotency: rad = span of basis words of length >= 1, iterate
// V <- span{a*v} until zero. A nonzero fixed point means the ideal was not
// admissible even though the quotient is finite-dimensional.
bool arrow_ideal_nilpotent(const BoundQuiverAlgebra& A) {
  Field f = A.f();
  std::vector<int> positive;
  for (int k = 0; k < A.dim; ++k)
    if (A.basis[k].length() >= 1) positive.push_back(k);
  ExactMatrix v(A.field, static_cast<int>(positive.size()), A.dim);
  for (size_t r = 0; r < positive.size(); ++r) v.set(static_cast<int>(r), positive[r], f.one());
  int prev_rank = rank(v);
  while (prev_rank > 0) {
    std::vector<ExactMatrix> images;
    for (int r = 0; r < v.rows(); ++r) {
      AlgElem x = A.row_elem(v, r);
      for (int a = 0; a < A.quiver.arrow_count(); ++a) {
        Path ap{A.quiver.arrows[a].src, A.quiver.arrows[a].dst, {a}};
        AlgElem ax = A.mul(AlgElem{{ap, f.one()}}, x);
        if (!ax.empty()) images.push_back(A.elem_row(ax));
      }
    }
    if (images.empty()) return true;
    ExactMatrix next = images[0];
    for (size_t k = 1; k < images.size(); ++k) next = next.vstack(images[k]);
    RrefResult rr = rref(next);
    if (rr.rank == 0) return true;
    if (rr.rank >= prev_rank) return false;  // chain stalled above zero
    ExactMatrix reduced(A.field, rr.rank, A.dim);
    for (int r = 0; r < rr.rank; ++r)
      for (int c = 0; c < A.dim; ++c) reduced.set(r, c, rr.r.at(r, c));
    v = reduced;
    prev_rank = rr.rank;
  }
  return true;
}

}  // namespace

AlgebraPtr build_algebra(FieldSpec field, const Quiver& quiver,
                         const RelationSet& relations, int degree_cap) {
  auto A = std::make_shared<BoundQuiverAlgebra>();
  A->field = field;
  A->quiver = quiver;
  A->input_relations = relations;
  A->groebner = groebner_complete(field, quiver, relations, degree_cap);
  if (!A->groebner.finite_below_cap)
    throw Error("not-finite-dimensional-below-cap",
                "irreducible paths reach the degree cap");

  A->basis = normal_words(quiver, A->groebner, degree_cap);
  A->dim = static_cast<int>(A->basis.size());

  A->idem_index.assign(quiver.vertex_count(), -1);
  A->paths_between.assign(
      quiver.vertex_count(),
      std::vector<std::vector<int>>(quiver.vertex_count()));
  for (int k = 0; k < A->dim; ++k) {
    const Path& p = A->basis[k];
    if (p.trivial()) A->idem_index[p.source] = k;
    A->paths_between[p.source][p.target].push_back(k);
  }

  Field f(field);
  A->table.assign(A->dim, std::vector<std::vector<std::pair<int, Scalar>>>(A->dim));
  for (int i = 0; i < A->dim; ++i)
    for (int j = 0; j < A->dim; ++j) {
      if (A->basis[i].target != A->basis[j].source) continue;
      AlgElem prod = A->nf(AlgElem{{compose_paths(A->basis[i], A->basis[j]), f.one()}});
      for (const auto& [p, c] : prod) {
        int k = A->basis_index(p);
        if (k < 0) throw Error("internal", "product left the basis span");
        A->table[i][j].emplace_back(k, c);
      }
    }

  if (!arrow_ideal_nilpotent(*A))
    throw Error("inadmissible", "arrow ideal is not nilpotent modulo the relations");
  return A;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto back = a->op_back_.lock()) return back;
  if (a->op_forward_) return a->op_forward_;

  RelationSet reversed;
  for (const Relation& rel : a->input_relations) {
    Relation r;
    for (const RelationTerm& t : rel.terms) {
      RelationTerm rt{t.coeff, t.arrows};
      std::reverse(rt.arrows.begin(), rt.arrows.end());
      r.terms.push_back(std::move(rt));
    }
    reversed.push_back(std::move(r));
  }
  AlgebraPtr b = build_algebra(a->field, a->quiver.reversed(), reversed,
                               a->groebner.degree_cap);
  a->op_forward_ = b;
  b->op_back_ = a;
  return b;
}

AlgElem reverse_elem(const BoundQuiverAlgebra& from,
                     const BoundQuiverAlgebra& to, const AlgElem& x) {
  (void)from;
  AlgElem out;
  for (const auto& [p, c] : x) out.emplace(reversed_path(p), c);
  return to.nf(out);
}

}  // namespace nab
