#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nabelian/corpus.hpp"
#include "nabelian/parse.hpp"
#include "nabelian/report.hpp"

using namespace nab;

namespace {

ParsedFile parse_corpus(const std::string& name) {
  return parse_algebra_text(load_corpus(name).content);
}

}  // namespace

TEST_CASE("parsing algebra files") {
  ParsedFile pf = parse_corpus("auslander_kx2");
  CHECK(pf.algebra->dim == 5);
  CHECK(pf.algebra->field == FieldSpec::rationals());
  CHECK(pf.algebra->quiver.vertices == std::vector<std::string>{"1", "2"});
  REQUIRE(pf.modules.size() == 2);
  CHECK(pf.modules[0].name == "s1");
  CHECK(pf.modules[0].rep.dims == std::vector<int>{1, 0});
  const Representation& p1 = find_module(pf, "p1");
  CHECK(isomorphic(p1, standard_module(pf.algebra, StandardKind::Projective, 0)));
  CHECK_THROWS_AS(find_module(pf, "nope"), Error);

  ParsedFile nak = parse_corpus("nakayama_x2");
  CHECK(nak.algebra->dim == 2);
  CHECK(nak.algebra->field == FieldSpec::prime_field(2));

  // Relations with several signed terms.
  ParsedFile two = parse_algebra_text(
      "field Q\n"
      "vertex 1 2 3\n"
      "arrow a 1 2\narrow b 2 3\narrow c 1 2\narrow d 2 3\n"
      "relation a*b - 2*c*d + 1/3*a*d\n");
  CHECK(two.algebra->quiver.arrow_count() == 4);
  CHECK(two.algebra->dim > 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      parse_algebra_text(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message_of("vertex 1\nfield X\n") ==
        "line 2: expected 'field Q' or 'field F <p>'");
  CHECK(message_of("field Q\nvertex 1\narrow a 1 9\n") ==
        "line 3: unknown vertex '9'");
  CHECK(message_of("field Q\nvertex 1\narrow x 1 1\nrelation y*x\n") ==
        "line 4: unknown arrow 'y' in relation");
  CHECK(message_of("vertex 1\narrow x 1 1\nrelation x*x\n") ==
        "line 3: the field must be declared before relations");
  CHECK(message_of("field Q\nvertex 1 2\narrow a 1 2\nrelation a*a\n") ==
        "line 4: non-composable arrows in relation term 'a*a'");
  CHECK(message_of("field Q\nvertex 1\nmodule m\ndim 1 1\n") ==
        "line 4: expected one dimension per vertex (1)");
  CHECK(message_of("field Q\nvertex 1\nmodule m\nmap x [[1]]\n") ==
        "line 4: dim must precede map lines");
  CHECK(message_of("field Q\nvertex 1\narrow x 1 1\nrelation "
                   "x*x\nmodule m\ndim 2\nmap x [[1,0]]\n") ==
        "line 7: expected 2 rows");
  CHECK(message_of("field Q\nvertex 1\nbogus 3\n") ==
        "line 3: unknown directive 'bogus'");
  CHECK(message_of("field Q\nvertex 1\nmodule m\ndim 1\nmodule m\ndim 1\n") ==
        "line 5: duplicate module 'm'");

  // A module block that breaks a relation is rejected with its location.
  std::string bad =
      "field Q\nvertex 1 2\narrow a 1 2\narrow b 2 1\nrelation a*b\n"
      "module m\ndim 1 1\nmap a [[1]]\nmap b [[1]]\n";
  CHECK(message_of(bad).find("line 6: module 'm' violates the relations") == 0);
}

TEST_CASE("map specs") {
  AlgebraPtr a = parse_corpus("auslander_kx2").algebra;

  ProjMatrix f = parse_map_spec(a, "P(1)->P(2): [[b]]");
  CHECK(f.row_vertices == std::vector<int>{0});
  CHECK(f.col_vertices == std::vector<int>{1});
  CHECK(f.at(0, 0).size() == 1);

  // Spaces are free, coefficients and trivial paths parse, entries reduce
  // to normal form.
  ProjMatrix g = parse_map_spec(a, "P(1+2) -> P(1): [[2*e_1 - a*b], [a]]");
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 1);
  CHECK(a->elem_to_string(g.at(0, 0)) == "2*e_1");
  ProjMatrix z = parse_map_spec(a, "P(1)->P(1): [[a*b]]");
  CHECK(z.at(0, 0).empty());

  ProjMatrix empty_src = parse_map_spec(a, "P()->P(1): []");
  CHECK(empty_src.rows() == 0);
  CHECK(empty_src.cols() == 1);

  CHECK_THROWS_WITH_AS(parse_map_spec(a, "P(9)->P(1): [[0]]"),
                       doctest::Contains("unknown vertex"), Error);
  CHECK_THROWS_WITH_AS(parse_map_spec(a, "P(1)->P(2): [[b],[b]]"),
                       doctest::Contains("one per source summand"), Error);
  CHECK_THROWS_WITH_AS(parse_map_spec(a, "P(1)->P(2): [[b*b]]"),
                       doctest::Contains("non-composable"), Error);
  CHECK_THROWS_WITH_AS(parse_map_spec(a, "P(1)->P(2): [[a]]"),
                       doctest::Contains("entries must be paths"), Error);
  CHECK_THROWS_WITH_AS(parse_map_spec(a, "P(1)->P(2): [[2]]"),
                       doctest::Contains("coefficient without a path"), Error);
  CHECK_THROWS_WITH_AS(parse_map_spec(a, "Q(1)->P(2): [[b]]"),
                       doctest::Contains("expected 'P('"), Error);
}

TEST_CASE("bundled corpus matches its expectations") {
  REQUIRE(corpus().size() == 5);
  CHECK_THROWS_AS(load_corpus("nope"), Error);

  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    ParsedFile pf = parse_algebra_text(e.content);
    const AlgebraPtr& a = pf.algebra;
    CHECK(a->dim == e.expected.dimension);

    int cap = default_dim_cap(a);
    DimResult gl = gldim(a, cap);
    CHECK(gl.above_cap == e.expected.gldim_above_cap);
    if (!gl.above_cap) CHECK(gl.value == e.expected.gldim);

    DomdimResult dom = domdim(a, cap);
    if (e.expected.domdim_infinite) {
      CHECK(dom.kind == DomdimResult::Kind::Infinite);
    } else {
      CHECK(dom.kind == DomdimResult::Kind::Finite);
      CHECK(dom.value == e.expected.domdim);
    }

    NAbelianVerdict v = detect_n(a, cap);
    if (e.expected.verdict == "AllN") {
      CHECK(v.kind == NAbelianVerdict::Kind::AllN);
    } else if (e.expected.verdict == "ExactlyN") {
      CHECK(v.kind == NAbelianVerdict::Kind::ExactlyN);
      CHECK(v.n == e.expected.n);
    } else {
      CHECK(v.kind == NAbelianVerdict::Kind::NotNAbelianUpTo);
    }
  }
}

TEST_CASE("corpus files on disk equal the embedded corpus") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    std::ifstream in(std::string(NABELIAN_CORPUS_DIR) + "/" + e.name + ".alg",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == e.content);
  }
}

TEST_CASE("json reports") {
  DimResult fin{3, false};
  CHECK(json_dim(fin)["value"] == 3);
  DimResult above{7, true};
  CHECK(json_dim(above)["above_cap"] == true);
  CHECK(!json_dim(above).contains("value"));

  DomdimResult inf;
  inf.kind = DomdimResult::Kind::Infinite;
  CHECK(json_domdim(inf)["kind"] == "infinite");

  AlgebraPtr a = parse_corpus("semisimple3").algebra;
  NAbelianVerdict v = detect_n(a, 4);
  Json jv = json_verdict(v);
  CHECK(jv["kind"] == "AllN");
  CHECK(jv["cap"] == 4);

  CrossCheckReport r = cross_check(a, 1, 7, 5, true);
  Json jc = json_checks(r);
  CHECK(jc["all_pass"] == true);
  CHECK(jc["results"].is_array());
  CHECK(jc["results"].size() == r.checks.size());

  // Sorted keys and stable rendering.
  Json j;
  j["zeta"] = 1;
  j["alpha"] = "1/2";
  std::string s = render_json(j);
  CHECK(s == "{\n  \"alpha\": \"1/2\",\n  \"zeta\": 1\n}\n");
  CHECK(render_json(j) == s);
}
