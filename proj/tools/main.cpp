#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nabelian/parse.hpp"
#include "nabelian/report.hpp"

using namespace nab;

namespace {

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int env_cap() {
  const char* v = std::getenv("NABELIAN_CAP");
  if (!v) return 0;
  int k = std::atoi(v);
  return k > 0 ? k : 0;
}

// Precedence: explicit --cap, then NABELIAN_CAP, then dimension + 2.
int effective_cap(const AlgebraPtr& a, int cli_cap) {
  if (cli_cap > 0) return cli_cap;
  if (int e = env_cap(); e > 0) return e;
  return default_dim_cap(a);
}

Json algebra_header(const std::string& id, const ParsedFile& pf) {
  Json j;
  j["id"] = id;
  j["field"] = json_field(pf.algebra->field);
  j["dimension"] = pf.algebra->dim;
  return j;
}

Json vertex_labels(const AlgebraPtr& a, const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(a->quiver.vertices[v]);
  return out;
}

void emit(const Json& j) { std::cout << render_json(j); }

int cmd_validate(const std::string& file, int degree_cap) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  Json j = algebra_header(stem_of(file), pf);
  j["vertices"] = a->quiver.vertices;
  Json arrows = Json::array();
  for (const Arrow& ar : a->quiver.arrows) {
    Json ja;
    ja["label"] = ar.label;
    ja["src"] = a->quiver.vertices[ar.src];
    ja["dst"] = a->quiver.vertices[ar.dst];
    arrows.push_back(ja);
  }
  j["arrows"] = arrows;
  Json mods = Json::array();
  for (const NamedModule& m : pf.modules) {
    Json jm;
    jm["name"] = m.name;
    jm["dims"] = m.rep.dims;
    jm["total_dim"] = m.rep.total_dim();
    mods.push_back(jm);
  }
  j["modules"] = mods;
  j["ok"] = true;
  emit(j);
  return 0;
}

int cmd_invariants(const std::string& file, int degree_cap, int cap) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  int k = effective_cap(a, cap);
  Json j = algebra_header(stem_of(file), pf);
  j["cap"] = k;
  {
    SectionTimer t("invariants");
    j["gldim"] = json_dim(gldim(a, k));
    j["gldim_opposite"] = json_dim(gldim(opposite(a), k));
    j["domdim"] = json_domdim(domdim(a, k));
    Json ps = Json::array();
    for (int v = 0; v < a->quiver.vertex_count(); ++v) {
      Json row;
      row["vertex"] = a->quiver.vertices[v];
      row["pdim"] =
          json_dim(pdim(standard_module(a, StandardKind::Simple, v), k));
      ps.push_back(row);
    }
    j["pdim_simples"] = ps;
  }
  emit(j);
  return 0;
}

int cmd_detect(const std::string& file, int degree_cap, int cap) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  int k = effective_cap(a, cap);
  Json j = algebra_header(stem_of(file), pf);
  {
    SectionTimer t("detect");
    j["verdict"] = json_verdict(detect_n(a, k));
  }
  emit(j);
  return 0;
}

int cmd_check(const std::string& file, int degree_cap, int n, uint64_t seed,
              int samples) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  Json j = algebra_header(stem_of(file), pf);
  j["n"] = n;
  j["seed"] = seed;
  j["samples"] = samples;
  CrossCheckReport r;
  {
    SectionTimer t("checks");
    r = cross_check(a, n, seed, samples, true);
  }
  j["checks"] = json_checks(r);
  emit(j);
  return r.fatal ? 1 : 0;
}

int cmd_resolve(const std::string& file, int degree_cap,
                const std::string& module_name, int length, int cap) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  const Representation& m = find_module(pf, module_name);
  Json j = algebra_header(stem_of(file), pf);
  j["module"] = module_name;
  j["dims"] = m.dims;
  {
    SectionTimer t("resolve");
    Resolution r = minimal_resolution(m, length);
    verify_resolution(r);
    j["length"] = r.length();
    j["complete"] = r.complete;
    Json terms = Json::array();
    for (const ProjSum& term : r.terms)
      terms.push_back(vertex_labels(a, term.vertices));
    j["terms"] = terms;
    j["pdim"] = json_dim(pdim(m, effective_cap(a, cap)));
  }
  emit(j);
  return 0;
}

int cmd_transpose(const std::string& file, int degree_cap,
                  const std::string& module_name) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  const Representation& m = find_module(pf, module_name);
  Json j = algebra_header(stem_of(file), pf);
  j["module"] = module_name;
  j["dims"] = m.dims;
  {
    SectionTimer t("transpose");
    TransposeResult tr = transpose(m);
    j["transpose_dims"] = tr.rep.dims;
    Json pres;
    pres["p1"] = vertex_labels(a, tr.presentation.row_vertices);
    pres["p0"] = vertex_labels(a, tr.presentation.col_vertices);
    j["presentation"] = pres;
    DoubleDualSequence dd = double_dual_sequence(m);
    Json jdd;
    jdd["e1_dims"] = dd.e1.dims;
    jdd["e2_dims"] = dd.e2.dims;
    jdd["double_star_dims"] = dd.double_star.dims;
    j["double_dual"] = jdd;
    j["torsion_free_1"] = dd.e1.total_dim() == 0;
    j["torsion_free_2"] = dd.e1.total_dim() == 0 && dd.e2.total_dim() == 0;
  }
  emit(j);
  return 0;
}

int cmd_ncokernel(const std::string& file, int degree_cap,
                  const std::string& map_spec, int n) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  ProjMatrix f = parse_map_spec(a, map_spec);
  Json j = algebra_header(stem_of(file), pf);
  j["map"] = map_spec;
  j["n"] = n;
  SectionTimer t("ncokernel");
  SequenceOfProjectives co;
  try {
    co = n_cokernel(f, n);
  } catch (const Error& e) {
    if (e.code != "resolution-exceeds-length") throw;
    j["exists"] = false;
    j["reason"] = e.what();
    emit(j);
    return 0;
  }
  j["exists"] = true;
  Json maps = Json::array();
  for (const ProjMatrix& g : co.maps) {
    Json jm;
    jm["source"] = vertex_labels(a, g.row_vertices);
    jm["target"] = vertex_labels(a, g.col_vertices);
    Json entries = Json::array();
    for (int r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < g.cols(); ++c)
        row.push_back(a->elem_to_string(g.at(r, c)));
      entries.push_back(row);
    }
    jm["entries"] = entries;
    maps.push_back(jm);
  }
  j["cokernel"] = maps;
  SequenceOfProjectives full;
  full.maps.push_back(f);
  for (const ProjMatrix& g : co.maps) full.maps.push_back(g);
  bool nexact = check_sequence(full, SequenceMode::NExact, n);
  j["n_exact_with_input"] = nexact;
  if (nexact) j["splits"] = splits(full);
  emit(j);
  return 0;
}

int cmd_selftest(const std::string& file, int degree_cap, int cap,
                 uint64_t seed, int samples) {
  ParsedFile pf = parse_algebra_file(file, degree_cap);
  const AlgebraPtr& a = pf.algebra;
  int k = effective_cap(a, cap);
  Json j = algebra_header(stem_of(file), pf);
  {
    SectionTimer t("invariants");
    Json inv;
    inv["cap"] = k;
    inv["gldim"] = json_dim(gldim(a, k));
    inv["gldim_opposite"] = json_dim(gldim(opposite(a), k));
    inv["domdim"] = json_domdim(domdim(a, k));
    j["invariants"] = inv;
  }
  NAbelianVerdict v;
  {
    SectionTimer t("detect");
    v = detect_n(a, k);
    j["verdict"] = json_verdict(v);
  }
  int check_n = 1;
  bool expect = false;
  switch (v.kind) {
    case NAbelianVerdict::Kind::AllN:
      check_n = 1;
      expect = true;
      break;
    case NAbelianVerdict::Kind::ExactlyN:
      check_n = v.n;
      expect = true;
      break;
    case NAbelianVerdict::Kind::NotNAbelianUpTo:
      check_n = 1;
      expect = false;
      break;
  }
  CrossCheckReport r;
  {
    SectionTimer t("checks");
    r = cross_check(a, check_n, seed, samples, expect);
  }
  Json jc = json_checks(r);
  jc["n"] = check_n;
  jc["seed"] = seed;
  jc["samples"] = samples;
  jc["expect_n_abelian"] = expect;
  j["checks"] = jc;
  j["ok"] = !r.fatal;
  emit(j);
  return r.fatal ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides for which n the finitely generated projectives over a bound "
      "quiver algebra form an n-abelian category, with supporting "
      "invariants and sampled cross-checks."};
  app.require_subcommand(1);

  std::string file, module_name, map_spec;
  int cap = 0;
  int degree_cap = 20;
  int n = 1;
  int length = 3;
  int samples = 30;
  uint64_t seed = 42;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "algebra file")->required();
    sub->add_option("--degree-cap", degree_cap,
                    "Groebner completion degree cap");
  };

  CLI::App* v = app.add_subcommand("validate", "parse and validate the file");
  add_common(v);

  CLI::App* inv = app.add_subcommand(
      "invariants", "dimension, global and dominant dimension, simple pdims");
  add_common(inv);
  inv->add_option("--cap", cap, "resolution cap (default: dimension + 2)");

  CLI::App* det = app.add_subcommand(
      "detect", "decide for which n the projectives form an n-abelian category");
  add_common(det);
  det->add_option("--cap", cap, "resolution cap (default: dimension + 2)");

  CLI::App* chk = app.add_subcommand(
      "check", "sampled consistency checks for a claimed n");
  add_common(chk);
  chk->add_option("-n,--n", n, "claimed n")->required();
  chk->add_option("--seed", seed, "sampling seed");
  chk->add_option("--samples", samples, "samples per check");

  CLI::App* res = app.add_subcommand(
      "resolve", "minimal projective resolution of a named module");
  add_common(res);
  res->add_option("--module", module_name, "module name")->required();
  res->add_option("--length", length, "resolution length")->required();
  res->add_option("--cap", cap, "pdim cap (default: dimension + 2)");

  CLI::App* tr = app.add_subcommand(
      "transpose", "transpose and double dual sequence of a named module");
  add_common(tr);
  tr->add_option("--module", module_name, "module name")->required();

  CLI::App* nc = app.add_subcommand(
      "ncokernel", "n-cokernel of a morphism between projectives");
  add_common(nc);
  nc->add_option("--map", map_spec, "morphism literal, see docs/file-format.md")
      ->required();
  nc->add_option("-n,--n", n, "length of the cokernel sequence")->required();

  CLI::App* st = app.add_subcommand(
      "selftest", "invariants, verdict, and sampled cross-checks in one run");
  add_common(st);
  st->add_option("--cap", cap, "resolution cap (default: dimension + 2)");
  st->add_option("--seed", seed, "sampling seed");
  st->add_option("--samples", samples, "samples per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*v) return cmd_validate(file, degree_cap);
    if (*inv) return cmd_invariants(file, degree_cap, cap);
    if (*det) return cmd_detect(file, degree_cap, cap);
    if (*chk) return cmd_check(file, degree_cap, n, seed, samples);
    if (*res) return cmd_resolve(file, degree_cap, module_name, length, cap);
    if (*tr) return cmd_transpose(file, degree_cap, module_name);
    if (*nc) return cmd_ncokernel(file, degree_cap, map_spec, n);
    if (*st) return cmd_selftest(file, degree_cap, cap, seed, samples);
  } catch (const Error& e) {
    Json j;
    j["error"]["code"] = e.code;
    j["error"]["message"] = e.what();
    emit(j);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json j;
    j["error"]["code"] = "unexpected";
    j["error"]["message"] = e.what();
    emit(j);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
