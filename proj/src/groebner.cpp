#include "nabelian/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nab {

std::optional<int> Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i] == label) return i;
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& label) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows[i].label == label) return i;
  return std::nullopt;
}

Quiver Quiver::reversed() const {
  Quiver r;
  r.vertices = vertices;
  for (const Arrow& a : arrows) r.arrows.push_back({a.label, a.dst, a.src});
  return r;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  if (vertices.empty()) throw Error("bad-quiver", "no vertices");
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw Error("bad-quiver", "duplicate vertex label '" + v + "'");
  for (const Arrow& a : arrows) {
    if (!seen.insert(a.label).second)
      throw Error("bad-quiver", "duplicate label '" + a.label + "'");
    if (a.src < 0 || a.src >= vertex_count() || a.dst < 0 || a.dst >= vertex_count())
      throw Error("bad-quiver", "arrow '" + a.label + "' has a dangling endpoint");
  }
}

bool operator==(const Path& a, const Path& b) {
  return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
}

bool PathLess::operator()(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  if (a.source != b.source) return a.source < b.source;  // trivial paths
  return a.target < b.target;
}

Path compose_paths(const Path& p, const Path& q) {
  if (p.target != q.source)
    throw Error("bad-path", "non-composable concatenation");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path reversed_path(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertices[p.source];
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += q.arrows[p.arrows[k]].label;
  }
  return s;
}

AlgElem elem_add(const Field& f, const AlgElem& a, const AlgElem& b) {
  AlgElem out = a;
  for (const auto& [p, c] : b) {
    auto it = out.find(p);
    if (it == out.end()) {
      out.emplace(p, c);
    } else {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

AlgElem elem_scaled(const Field& f, const AlgElem& a, const Scalar& s) {
  AlgElem out;
  if (f.is_zero(s)) return out;
  for (const auto& [p, c] : a) out.emplace(p, f.mul(c, s));
  return out;
}

AlgElem elem_concat(const Field& f, const AlgElem& a, const AlgElem& b) {
  AlgElem out;
  for (const auto& [p, cp] : a)
    for (const auto& [q, cq] : b) {
      if (p.target != q.source) continue;
      Path pq = compose_paths(p, q);
      Scalar c = f.mul(cp, cq);
      auto it = out.find(pq);
      if (it == out.end()) {
        out.emplace(std::move(pq), c);
      } else {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

bool elem_eq(const Field& f, const AlgElem& a, const AlgElem& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !f.eq(ia->second, ib->second)) return false;
  return true;
}

namespace {

// Leftmost position at which `word` contains `sub`, or -1.
int find_subword(const std::vector<int>& word, const std::vector<int>& sub) {
  if (sub.size() > word.size()) return -1;
  for (size_t pos = 0; pos + sub.size() <= word.size(); ++pos) {
    bool hit = true;
    for (size_t k = 0; k < sub.size(); ++k)
      if (word[pos + k] != sub[k]) {
        hit = false;
        break;
      }
    if (hit) return static_cast<int>(pos);
  }
  return -1;
}

Path subpath(const Quiver& quiver, const Path& p, int from, int len) {
  Path out;
  out.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + from + len);
  if (from < p.length())
    out.source = quiver.arrows[p.arrows[from]].src;
  else
    out.source = p.target;
  if (len > 0)
    out.target = quiver.arrows[p.arrows[from + len - 1]].dst;
  else
    out.target = out.source;
  return out;
}

}  // namespace

AlgElem normal_form(const Groebner& g, const AlgElem& x) {
  Field f(g.field);
  AlgElem work = x;
  AlgElem out;
  while (!work.empty()) {
    auto it = std::prev(work.end());  // largest remaining term
    Path p = it->first;
    Scalar c = it->second;
    int chosen = -1, pos = -1;
    for (size_t k = 0; k < g.elems.size(); ++k) {
      pos = find_subword(p.arrows, g.leads[k].arrows);
      if (pos >= 0) {
        chosen = static_cast<int>(k);
        break;
      }
    }
    if (chosen < 0) {
      out.emplace(p, c);
      work.erase(it);
      continue;
    }
    // Rewrite the occurrence: p = u * lead * v, subtract c * u * elem * v.
    // The leading terms cancel; every replacement word is strictly smaller.
    const AlgElem& h = g.elems[chosen];
    Path u, v;
    int lead_len = g.leads[chosen].length();
    u.arrows.assign(p.arrows.begin(), p.arrows.begin() + pos);
    u.source = p.source;
    u.target = g.leads[chosen].source;
    v.arrows.assign(p.arrows.begin() + pos + lead_len, p.arrows.end());
    v.source = g.leads[chosen].target;
    v.target = p.target;
    AlgElem u_elem{{u, f.one()}};
    AlgElem v_elem{{v, f.one()}};
    AlgElem repl = elem_concat(f, u_elem, elem_concat(f, h, v_elem));
    work = elem_add(f, work, elem_scaled(f, repl, f.neg(c)));
  }
  return out;
}

namespace {

struct PendingPair {
  int len;                // overlap word length
  std::vector<int> word;  // the overlap word itself, for deterministic order
  int gi, gj, cut;        // suffix of leads[gi] of length `cut` = prefix of leads[gj]
  bool operator<(const PendingPair& o) const {
    return std::tie(len, word, gi, gj, cut) < std::tie(o.len, o.word, o.gi, o.gj, o.cut);
  }
};

void queue_overlaps(const Groebner& g, int i, int j, int work_len,
                    std::set<PendingPair>& pairs) {
  const Path& w = g.leads[i];
  const Path& z = g.leads[j];
  int maxcut = std::min(w.length(), z.length());
  for (int cut = 1; cut <= maxcut; ++cut) {
    if (cut == w.length() && cut == z.length()) continue;  // equal words
    bool match = true;
    for (int k = 0; k < cut; ++k)
      if (w.arrows[w.length() - cut + k] != z.arrows[k]) {
        match = false;
        break;
      }
    if (!match) continue;
    PendingPair p;
    p.word = w.arrows;
    p.word.insert(p.word.end(), z.arrows.begin() + cut, z.arrows.end());
    p.len = static_cast<int>(p.word.size());
    if (p.len > work_len) continue;
    p.gi = i;
    p.gj = j;
    p.cut = cut;
    pairs.insert(std::move(p));
  }
}

void ensure_admissible_terms(const Quiver& quiver, const AlgElem& x) {
  for (const auto& [p, c] : x) {
    (void)c;
    if (p.length() < 2)
      throw Error("inadmissible", "relation involves the path '" +
                                      path_to_string(quiver, p) +
                                      "' of length < 2");
  }
}

}  // namespace

Groebner groebner_complete(FieldSpec field, const Quiver& quiver,
                           const RelationSet& relations, int degree_cap) {
  quiver.validate();
  Field f(field);
  Groebner g;
  g.field = field;
  g.degree_cap = degree_cap;

  // Validate and normalize the input relations into path-algebra elements.
  std::vector<AlgElem> inputs;
  for (const Relation& rel : relations) {
    AlgElem elem;
    std::optional<std::pair<int, int>> endpoints;
    for (const RelationTerm& t : rel.terms) {
      if (f.is_zero(t.coeff)) continue;
      if (t.arrows.size() < 2)
        throw Error("inadmissible", "relation term of length < 2");
      Path p;
      p.arrows = t.arrows;
      for (size_t k = 0; k < t.arrows.size(); ++k) {
        int a = t.arrows[k];
        if (a < 0 || a >= quiver.arrow_count())
          throw Error("bad-relation", "unknown arrow in relation");
        if (k > 0 && quiver.arrows[t.arrows[k - 1]].dst != quiver.arrows[a].src)
          throw Error("bad-relation", "non-composable arrows in relation term");
      }
      p.source = quiver.arrows[t.arrows.front()].src;
      p.target = quiver.arrows[t.arrows.back()].dst;
      if (p.length() > degree_cap)
        throw Error("bad-relation", "relation longer than the degree cap");
      if (endpoints && *endpoints != std::make_pair(p.source, p.target))
        throw Error("bad-relation", "relation terms are not parallel");
      endpoints = {p.source, p.target};
      elem = elem_add(f, elem, AlgElem{{p, t.coeff}});
    }
    if (!elem.empty()) inputs.push_back(std::move(elem));
  }

  const int work_len = 2 * degree_cap;
  int fuel = 20000;

  auto add_element = [&](AlgElem x) -> bool {
    x = normal_form(g, x);
    if (x.empty()) return false;
    ensure_admissible_terms(quiver, x);
    Scalar lead_coeff = std::prev(x.end())->second;
    x = elem_scaled(f, x, f.inv(lead_coeff));
    g.leads.push_back(std::prev(x.end())->first);
    g.elems.push_back(std::move(x));
    return true;
  };

  // Seed, keeping the leading-word antichain: when a new leading word divides
  // an older one, that element is pulled and re-reduced.
  std::vector<AlgElem> queue = inputs;
  std::set<PendingPair> pairs;
  while (!queue.empty() || !pairs.empty()) {
    if (--fuel < 0 || static_cast<int>(g.elems.size()) > 5000)
      throw Error("groebner-fuel-exhausted",
                  "completion exceeded its work bounds");
    AlgElem next;
    if (!queue.empty()) {
      next = std::move(queue.back());
      queue.pop_back();
    } else {
      PendingPair pp = *pairs.begin();
      pairs.erase(pairs.begin());
      // S-polynomial g_i * tail - head * g_j, leading terms both equal the
      // overlap word.
      const Path& w = g.leads[pp.gi];
      const Path& z = g.leads[pp.gj];
      Path tail = subpath(quiver, z, pp.cut, z.length() - pp.cut);
      Path head = subpath(quiver, w, 0, w.length() - pp.cut);
      AlgElem left = elem_concat(f, g.elems[pp.gi], AlgElem{{tail, f.one()}});
      AlgElem right = elem_concat(f, AlgElem{{head, f.one()}}, g.elems[pp.gj]);
      next = elem_add(f, left, elem_scaled(f, right, f.neg(f.one())));
    }
    if (!add_element(std::move(next))) continue;
    int id = static_cast<int>(g.elems.size()) - 1;
    // Restore the antichain: older elements whose lead contains the new lead
    // get re-reduced.
    for (int k = id - 1; k >= 0; --k) {
      if (find_subword(g.leads[k].arrows, g.leads[id].arrows) < 0) continue;
      AlgElem displaced = std::move(g.elems[k]);
      g.elems.erase(g.elems.begin() + k);
      g.leads.erase(g.leads.begin() + k);
      std::set<PendingPair> kept;
      for (const PendingPair& pp : pairs) {
        if (pp.gi == k || pp.gj == k) continue;
        PendingPair q = pp;
        if (q.gi > k) --q.gi;
        if (q.gj > k) --q.gj;
        kept.insert(q);
      }
      pairs.swap(kept);
      --id;
      queue.push_back(std::move(displaced));
    }
    for (int k = 0; k <= id; ++k) {
      queue_overlaps(g, k, id, work_len, pairs);
      if (k != id) queue_overlaps(g, id, k, work_len, pairs);
    }
  }

  // Tail-reduce for a canonical reduced system.
  for (size_t k = 0; k < g.elems.size(); ++k) {
    AlgElem lead_term{{g.leads[k], f.one()}};
    AlgElem tail = elem_add(f, g.elems[k], elem_scaled(f, lead_term, f.neg(f.one())));
    g.elems[k] = elem_add(f, lead_term, normal_form(g, tail));
  }

  // Sort by leading word for deterministic output.
  std::vector<int> order(g.elems.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return PathLess{}(g.leads[a], g.leads[b]);
  });
  Groebner sorted = g;
  for (size_t k = 0; k < order.size(); ++k) {
    sorted.elems[k] = g.elems[order[k]];
    sorted.leads[k] = g.leads[order[k]];
  }
  g = std::move(sorted);

  g.finite_below_cap = true;
  for (const Path& p : normal_words(quiver, g, degree_cap + 1))
    if (p.length() >= degree_cap) {
      g.finite_below_cap = false;
      break;
    }
  return g;
}

std::vector<Path> normal_words(const Quiver& quiver, const Groebner& g,
                               int max_len) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (int v = 0; v < quiver.vertex_count(); ++v)
    frontier.push_back(Path::trivial_at(v));
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      out.push_back(p);
      if (p.length() + 1 >= max_len) continue;
      for (int a = 0; a < quiver.arrow_count(); ++a) {
        if (quiver.arrows[a].src != p.target) continue;
        Path q = p;
        q.arrows.push_back(a);
        q.target = quiver.arrows[a].dst;
        bool reducible = false;
        for (const Path& lead : g.leads)
          if (find_subword(q.arrows, lead.arrows) >= 0) {
            reducible = true;
            break;
          }
        if (!reducible) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    return PathLess{}(a, b);
  });
  return out;
}

}  // namespace nab
