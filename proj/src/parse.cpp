#include "nabelian/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nab {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error("parse", "line " + std::to_string(line) + ": " + msg);
}

// line <= 0 means the text came from a --map spec, not a file.
[[noreturn]] void matrix_fail(int line, const std::string& msg) {
  if (line > 0) fail(line, msg);
  throw Error("parse", "map spec: " + msg);
}

std::string strip_line(const std::string& raw) {
  std::string s = raw;
  size_t hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool number_like(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

// Splits "[[a,b],[c,d]]" into entry strings, tracking bracket depth.
std::vector<std::vector<std::string>> split_matrix(const std::string& s,
                                                   int line) {
  std::string t = s;
  if (t.empty() || t.front() != '[' || t.back() != ']')
    matrix_fail(line, "matrix literal must be enclosed in [ ]");
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<std::vector<std::string>> rows;
  int depth = 0;
  std::string cur;
  std::vector<std::string> pieces;
  for (char c : inner) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) matrix_fail(line, "unbalanced brackets in matrix literal");
    if (c == ',' && depth == 0) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) matrix_fail(line, "unbalanced brackets in matrix literal");
  pieces.push_back(cur);
  if (pieces.size() == 1 && strip_line(pieces[0]).empty()) return rows;
  for (const std::string& piece : pieces) {
    std::string row = strip_line(piece);
    if (row.size() < 2 || row.front() != '[' || row.back() != ']')
      matrix_fail(line, "matrix row must be enclosed in [ ]");
    std::string row_inner = strip_line(row.substr(1, row.size() - 2));
    std::vector<std::string> entries;
    if (!row_inner.empty()) {
      for (const std::string& e : split_on(row_inner, ',')) {
        std::string entry = strip_line(e);
        if (entry.empty()) matrix_fail(line, "empty matrix entry");
        entries.push_back(entry);
      }
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

struct ModuleDraft {
  std::string name;
  int start_line = 0;
  bool have_dims = false;
  std::vector<int> dims;
  std::vector<bool> map_seen;
  std::vector<ExactMatrix> maps;
};

struct FileDraft {
  bool have_field = false;
  FieldSpec field;
  Quiver quiver;
  RelationSet relations;
  bool algebra_done = false;
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;
  ModuleDraft draft;
  bool in_module = false;
};

int vertex_of(const FileDraft& d, const std::string& label, int line) {
  auto v = d.quiver.vertex_index(label);
  if (!v) fail(line, "unknown vertex '" + label + "'");
  return *v;
}

Relation parse_relation(const FileDraft& d, const std::vector<std::string>& toks,
                        int line) {
  if (!d.have_field) fail(line, "the field must be declared before relations");
  if (toks.empty()) fail(line, "relation needs at least one term");
  Field f(d.field);
  Relation rel;
  int sign = 1;
  bool expect_term = true;
  for (const std::string& tok : toks) {
    if (tok == "+" || tok == "-") {
      if (expect_term) fail(line, "misplaced sign in relation");
      sign = tok == "-" ? -1 : 1;
      expect_term = true;
      continue;
    }
    RelationTerm term;
    std::vector<std::string> chunks = split_on(tok, '*');
    size_t k = 0;
    if (number_like(chunks[0])) {
      term.coeff = f.from_string(chunks[0]);
      k = 1;
    } else {
      term.coeff = f.one();
    }
    if (sign < 0) term.coeff = f.neg(term.coeff);
    for (; k < chunks.size(); ++k) {
      auto a = d.quiver.arrow_index(chunks[k]);
      if (!a) fail(line, "unknown arrow '" + chunks[k] + "' in relation");
      term.arrows.push_back(*a);
    }
    if (term.arrows.size() < 2)
      fail(line, "relation terms need at least two arrows");
    for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
      if (d.quiver.arrows[term.arrows[i]].dst !=
          d.quiver.arrows[term.arrows[i + 1]].src)
        fail(line, "non-composable arrows in relation term '" + tok + "'");
    rel.terms.push_back(std::move(term));
    sign = 1;
    expect_term = false;
  }
  if (expect_term) fail(line, "relation ends with a dangling sign");
  const auto& arrows = d.quiver.arrows;
  int src = arrows[rel.terms[0].arrows.front()].src;
  int dst = arrows[rel.terms[0].arrows.back()].dst;
  for (const RelationTerm& t : rel.terms)
    if (arrows[t.arrows.front()].src != src ||
        arrows[t.arrows.back()].dst != dst)
      fail(line, "relation terms are not parallel");
  return rel;
}

void finish_algebra(FileDraft& d, int degree_cap, int line) {
  if (d.algebra_done) return;
  if (!d.have_field) fail(line, "missing field declaration");
  d.quiver.validate();
  d.algebra = build_algebra(d.field, d.quiver, d.relations, degree_cap);
  d.algebra_done = true;
}

void finish_module(FileDraft& d) {
  if (!d.in_module) return;
  if (!d.draft.have_dims)
    fail(d.draft.start_line,
         "module '" + d.draft.name + "' is missing its dim line");
  Representation rep;
  rep.alg = d.algebra;
  rep.dims = d.draft.dims;
  rep.arrow_maps = d.draft.maps;
  if (auto violation = validate(rep))
    fail(d.draft.start_line,
         "module '" + d.draft.name + "' violates the relations: " + *violation);
  d.modules.push_back({d.draft.name, std::move(rep)});
  d.in_module = false;
}

}  // namespace

ParsedFile parse_algebra_text(const std::string& text, int degree_cap) {
  FileDraft d;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = strip_line(raw);
    if (s.empty()) continue;
    std::vector<std::string> toks = split_ws(s);
    const std::string& key = toks[0];
    std::vector<std::string> rest(toks.begin() + 1, toks.end());

    if (key == "field" || key == "vertex" || key == "arrow" ||
        key == "relation") {
      if (d.algebra_done)
        fail(line, "algebra lines must precede module blocks");
    }

    if (key == "field") {
      if (d.have_field) fail(line, "duplicate field declaration");
      if (rest.size() == 1 && rest[0] == "Q") {
        d.field = FieldSpec::rationals();
      } else if (rest.size() == 2 && rest[0] == "F" && number_like(rest[1])) {
        try {
          d.field = FieldSpec::prime_field(
              static_cast<std::uint32_t>(std::stoul(rest[1])));
        } catch (const Error& e) {
          fail(line, e.what());
        }
      } else {
        fail(line, "expected 'field Q' or 'field F <p>'");
      }
      d.have_field = true;
    } else if (key == "vertex") {
      if (rest.empty()) fail(line, "vertex line needs at least one label");
      for (const std::string& v : rest) d.quiver.vertices.push_back(v);
    } else if (key == "arrow") {
      if (rest.size() != 3) fail(line, "expected 'arrow <label> <src> <dst>'");
      Arrow a;
      a.label = rest[0];
      a.src = vertex_of(d, rest[1], line);
      a.dst = vertex_of(d, rest[2], line);
      d.quiver.arrows.push_back(a);
    } else if (key == "relation") {
      d.relations.push_back(parse_relation(d, rest, line));
    } else if (key == "module") {
      if (rest.size() != 1) fail(line, "expected 'module <name>'");
      finish_algebra(d, degree_cap, line);
      finish_module(d);
      for (const NamedModule& m : d.modules)
        if (m.name == rest[0]) fail(line, "duplicate module '" + rest[0] + "'");
      d.draft = ModuleDraft{};
      d.draft.name = rest[0];
      d.draft.start_line = line;
      d.in_module = true;
    } else if (key == "dim") {
      if (!d.in_module) fail(line, "dim line outside a module block");
      if (d.draft.have_dims) fail(line, "duplicate dim line");
      if (static_cast<int>(rest.size()) != d.quiver.vertex_count())
        fail(line, "expected one dimension per vertex (" +
                       std::to_string(d.quiver.vertex_count()) + ")");
      for (const std::string& t : rest) {
        if (!number_like(t) || t.find('/') != std::string::npos ||
            t[0] == '-')
          fail(line, "dimensions must be non-negative integers");
        d.draft.dims.push_back(std::stoi(t));
      }
      d.draft.have_dims = true;
      d.draft.map_seen.assign(d.quiver.arrow_count(), false);
      for (const Arrow& a : d.quiver.arrows)
        d.draft.maps.push_back(ExactMatrix(
            d.algebra->field, d.draft.dims[a.src], d.draft.dims[a.dst]));
    } else if (key == "map") {
      if (!d.in_module) fail(line, "map line outside a module block");
      if (!d.draft.have_dims) fail(line, "dim must precede map lines");
      if (rest.empty()) fail(line, "expected 'map <arrow> [[...],...]'");
      auto a = d.quiver.arrow_index(rest[0]);
      if (!a) fail(line, "unknown arrow '" + rest[0] + "'");
      if (d.draft.map_seen[*a])
        fail(line, "duplicate map for arrow '" + rest[0] + "'");
      d.draft.map_seen[*a] = true;
      size_t pos = s.find('[');
      if (pos == std::string::npos) fail(line, "map line is missing its matrix");
      std::string literal;
      for (char c : s.substr(pos))
        if (!std::isspace(static_cast<unsigned char>(c))) literal += c;
      auto rows = split_matrix(literal, line);
      const Arrow& arrow = d.quiver.arrows[*a];
      int want_rows = d.draft.dims[arrow.src];
      int want_cols = d.draft.dims[arrow.dst];
      if (static_cast<int>(rows.size()) != want_rows)
        fail(line, "expected " + std::to_string(want_rows) + " rows");
      Field f(d.field);
      for (int r = 0; r < want_rows; ++r) {
        if (static_cast<int>(rows[r].size()) != want_cols)
          fail(line, "expected " + std::to_string(want_cols) +
                         " entries in row " + std::to_string(r));
        for (int c = 0; c < want_cols; ++c) {
          try {
            d.draft.maps[*a].set(r, c, f.from_string(rows[r][c]));
          } catch (const Error& e) {
            fail(line, e.what());
          }
        }
      }
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }
  finish_algebra(d, degree_cap, line);
  finish_module(d);
  ParsedFile out;
  out.algebra = d.algebra;
  out.modules = std::move(d.modules);
  return out;
}

ParsedFile parse_algebra_file(const std::string& path, int degree_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), degree_cap);
}

const Representation& find_module(const ParsedFile& file,
                                  const std::string& name) {
  for (const NamedModule& m : file.modules)
    if (m.name == name) return m.rep;
  throw Error("unknown-module", "no module named '" + name + "' in the file");
}

namespace {

// One summand list `i+j+..` between the parens of `P(...)`.
std::vector<int> parse_summands(const AlgebraPtr& a, const std::string& list) {
  std::vector<int> out;
  if (list.empty()) return out;
  for (const std::string& label : split_on(list, '+')) {
    auto v = a->quiver.vertex_index(label);
    if (!v)
      throw Error("parse", "map spec: unknown vertex '" + label + "'");
    out.push_back(*v);
  }
  return out;
}

AlgElem parse_entry_elem(const AlgebraPtr& a, const std::string& entry) {
  Field f(a->f());
  if (entry == "0") return {};
  // Split into signed terms at top level; entries contain no brackets.
  std::vector<std::pair<int, std::string>> terms;
  std::string cur;
  int sign = 1;
  for (size_t i = 0; i < entry.size(); ++i) {
    char c = entry[i];
    if ((c == '+' || c == '-') && i > 0) {
      if (cur.empty())
        throw Error("parse", "map spec: empty term in '" + entry + "'");
      terms.push_back({sign, cur});
      cur.clear();
      sign = c == '-' ? -1 : 1;
    } else if (c == '-' && i == 0) {
      sign = -1;
    } else if (c == '+' && i == 0) {
      sign = 1;
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw Error("parse", "map spec: empty term in '" + entry + "'");
  terms.push_back({sign, cur});

  AlgElem acc;
  for (const auto& [s, body] : terms) {
    std::vector<std::string> chunks = split_on(body, '*');
    Scalar coeff = f.one();
    size_t k = 0;
    if (number_like(chunks[0])) {
      coeff = f.from_string(chunks[0]);
      k = 1;
    }
    if (s < 0) coeff = f.neg(coeff);
    if (k >= chunks.size())
      throw Error("parse", "map spec: coefficient without a path in '" +
                               entry + "'");
    Path p;
    if (chunks.size() - k == 1 && chunks[k].rfind("e_", 0) == 0) {
      std::string label = chunks[k].substr(2);
      auto v = a->quiver.vertex_index(label);
      if (!v)
        throw Error("parse", "map spec: unknown vertex '" + label + "'");
      p = Path::trivial_at(*v);
    } else {
      for (; k < chunks.size(); ++k) {
        auto idx = a->quiver.arrow_index(chunks[k]);
        if (!idx)
          throw Error("parse",
                      "map spec: unknown arrow '" + chunks[k] + "'");
        if (!p.arrows.empty() &&
            a->quiver.arrows[p.arrows.back()].dst !=
                a->quiver.arrows[*idx].src)
          throw Error("parse", "map spec: non-composable word in '" + entry +
                                   "'");
        if (p.arrows.empty()) p.source = a->quiver.arrows[*idx].src;
        p.target = a->quiver.arrows[*idx].dst;
        p.arrows.push_back(*idx);
      }
    }
    acc = elem_add(f, acc, a->nf(AlgElem{{p, coeff}}));
  }
  return acc;
}

}  // namespace

ProjMatrix parse_map_spec(const AlgebraPtr& a, const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;

  auto expect = [&](const std::string& token, size_t at) {
    if (s.compare(at, token.size(), token) != 0)
      throw Error("parse", "map spec: expected '" + token +
                               "' in 'P(..)->P(..): [[..],..]'");
    return at + token.size();
  };
  size_t pos = expect("P(", 0);
  size_t close = s.find(')', pos);
  if (close == std::string::npos)
    throw Error("parse", "map spec: unterminated vertex list");
  std::vector<int> rows = parse_summands(a, s.substr(pos, close - pos));
  pos = expect("->P(", close + 1);
  close = s.find(')', pos);
  if (close == std::string::npos)
    throw Error("parse", "map spec: unterminated vertex list");
  std::vector<int> cols = parse_summands(a, s.substr(pos, close - pos));
  pos = expect(":", close + 1);

  auto entries = split_matrix(s.substr(pos), 0);
  if (entries.size() != rows.size())
    throw Error("parse", "map spec: expected " + std::to_string(rows.size()) +
                             " rows, one per source summand");
  ProjMatrix pm = pm_zero(a, rows, cols);
  for (size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != cols.size())
      throw Error("parse", "map spec: expected " + std::to_string(cols.size()) +
                               " entries in row " + std::to_string(r));
    for (size_t c = 0; c < cols.size(); ++c)
      pm.at(static_cast<int>(r), static_cast<int>(c)) =
          parse_entry_elem(a, entries[r][c]);
  }
  try {
    pm_validate(pm);
  } catch (const Error& e) {
    throw Error("parse", std::string("map spec: ") + e.what() +
                             " (entries must be paths from the target "
                             "summand's vertex to the source summand's)");
  }
  return pm;
}

}  // namespace nab
