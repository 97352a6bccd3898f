#include <random>
#include <sstream>

#include "nabelian/nabelian.hpp"

namespace nab {

namespace {

uint64_t sub_seed(uint64_t seed, int check, int i) {
  return seed + 0x9E3779B97F4A7C15ULL *
                    (static_cast<uint64_t>(check) * 1000003u +
                     static_cast<uint64_t>(i) + 1u);
}

std::string dims_string(const Representation& m) {
  std::ostringstream out;
  out << "(";
  for (size_t v = 0; v < m.dims.size(); ++v)
    out << (v ? "," : "") << m.dims[v];
  out << ")";
  return out.str();
}

bool realized_injective(const ModuleMap& f) {
  int r = 0;
  for (const ExactMatrix& b : f.blocks) r += rank(b);
  return r == f.source.total_dim();
}

}  // namespace

bool is_von_neumann_regular(const AlgebraPtr& a) {
  DimResult g = gldim(a, 1);
  return !g.above_cap && g.value == 0;
}

IsNAbelianResult is_n_abelian(const AlgebraPtr& a, int n) {
  if (n < 1) throw Error("bad-argument", "n-abelian categories need n >= 1");
  IsNAbelianResult out;
  out.gl = gldim(a, n + 2);
  out.dom = domdim(a, n + 1);
  bool gl_ok = !out.gl.above_cap && out.gl.value <= n + 1;
  bool dom_ok =
      out.dom.kind != DomdimResult::Kind::Finite || out.dom.value >= n + 1;
  out.value = gl_ok && dom_ok;
  return out;
}

NAbelianVerdict detect_n(const AlgebraPtr& a, int cap) {
  if (cap < 2) throw Error("bad-argument", "detection cap must be at least 2");
  NAbelianVerdict v;
  v.cap = cap;
  v.gl = gldim(a, cap);

  if (!v.gl.above_cap && v.gl.value == 0) {
    v.kind = NAbelianVerdict::Kind::AllN;
    v.dom = domdim(a, 2);
    v.justification =
        "global dimension 0: every n-exact sequence splits and the category "
        "of projectives is n-abelian for every n";
    return v;
  }
  if (v.gl.above_cap || v.gl.value == 1) {
    v.kind = NAbelianVerdict::Kind::NotNAbelianUpTo;
    v.dom = domdim(a, cap);
    v.justification =
        v.gl.above_cap
            ? "global dimension exceeds the cap; any n <= cap - 1 would force "
              "global dimension n + 1 <= cap"
            : "global dimension 1 would force n = 0, which is excluded";
    return v;
  }

  int n = v.gl.value - 1;
  IsNAbelianResult r = is_n_abelian(a, n);
  v.dom = r.dom;
  if (r.value) {
    v.kind = NAbelianVerdict::Kind::ExactlyN;
    v.n = n;
    v.justification =
        "global dimension n + 1 is bounded by the dominant dimension; n is "
        "unique because the global dimension pins it";
  } else {
    v.kind = NAbelianVerdict::Kind::NotNAbelianUpTo;
    v.justification =
        "the only candidate n = gldim - 1 fails the dominant dimension bound";
  }
  return v;
}

CrossCheckReport cross_check(const AlgebraPtr& a, int n, uint64_t seed,
                             int samples, bool expect_n_abelian) {
  if (n < 1) throw Error("bad-argument", "cross checks need n >= 1");
  if (samples < 1) throw Error("bad-argument", "need at least one sample");
  AlgebraPtr op = opposite(a);
  CrossCheckReport report;

  // Conditional checks follow from n-abelianness; their failure is fatal
  // only when the verdict claimed the algebra is n-abelian. Unconditional
  // checks are identities of any finite-dimensional algebra.
  auto add = [&](const CheckOutcome& c, bool unconditional) {
    report.checks.push_back(c);
    if (!c.pass) {
      report.all_pass = false;
      if (unconditional || expect_n_abelian) {
        report.fatal = true;
        if (report.fatal_reason.empty())
          report.fatal_reason =
              (unconditional ? "identity check failed: "
                             : "claimed n-abelian but a consequence fails: ") +
              c.name + (c.witness.empty() ? "" : " at " + c.witness);
      }
    }
  };

  // (i) Modules with pdim <= 1 are n-torsion free, on both sides.
  for (int side = 0; side < 2; ++side) {
    const AlgebraPtr& alg = side ? op : a;
    CheckOutcome c;
    c.name = side ? "torsion-free-r2-op" : "torsion-free-r2";
    std::mt19937_64 rng(sub_seed(seed, side, 0));
    int attempts = 0;
    while (c.samples < samples && attempts < 20 * samples) {
      ++attempts;
      ProjMatrix f = random_projmatrix(alg, rng, 3);
      ModuleMap realized =
          realize_projmatrix(f, make_proj_sum(alg, f.row_vertices),
                             make_proj_sum(alg, f.col_vertices));
      if (!realized_injective(realized)) continue;
      Representation m = map_cokernel(realized).rep;
      ++c.samples;
      if (c.pass && !is_k_torsion_free(m, n)) {
        c.pass = false;
        c.witness = "cokernel of " + pm_to_string(f);
      }
    }
    add(c, false);
  }

  // (ii) Grades concentrate in {0, n+1}; the zero module has infinite grade.
  {
    CheckOutcome c;
    c.name = "grade-profile";
    for (int i = 0; i < samples; ++i) {
      Representation m = random_module(a, sub_seed(seed, 2, i), 3);
      ++c.samples;
      GradeResult g = grade(m, n + 2);
      bool ok = m.total_dim() == 0
                    ? g.infinite
                    : !g.infinite && (g.value == 0 || g.value == n + 1);
      if (c.pass && !ok) {
        c.pass = false;
        std::ostringstream w;
        w << "module " << dims_string(m) << " has grade ";
        if (g.infinite)
          w << "infinity";
        else
          w << g.value;
        c.witness = w.str();
      }
    }
    add(c, false);
  }

  // (iii) Modules with pdim <= n embed into projectives: the kernel of the
  // canonical double dual map vanishes.
  {
    CheckOutcome c;
    c.name = "small-pdim-syzygy";
    int attempts = 0;
    for (int i = 0; c.samples < samples && attempts < 20 * samples; ++i) {
      ++attempts;
      Representation m = random_module(a, sub_seed(seed, 3, i), 3);
      if (pdim(m, n).above_cap) continue;
      ++c.samples;
      DoubleDualSequence dd = double_dual_sequence(m);
      if (c.pass && dd.e1.total_dim() != 0) {
        c.pass = false;
        c.witness = "module " + dims_string(m);
      }
    }
    add(c, false);
  }

  // (iv) Tor_1 against the transpose computes the stable hom space.
  {
    CheckOutcome c;
    c.name = "tor1-transpose-stable-hom";
    for (int i = 0; i < samples; ++i) {
      Representation f = random_module(a, sub_seed(seed, 4, 2 * i), 3);
      Representation h = random_module(a, sub_seed(seed, 4, 2 * i + 1), 3);
      ++c.samples;
      int tor = tor_table(h, transpose(f).rep, 1)[1];
      int stable = stable_hom_dim(f, h);
      if (c.pass && tor != stable) {
        c.pass = false;
        std::ostringstream w;
        w << "F " << dims_string(f) << ", H " << dims_string(h) << ": Tor_1 "
          << tor << " vs stable hom " << stable;
        c.witness = w.str();
      }
    }
    add(c, true);
  }

  // (v) Global dimension agrees with the opposite algebra.
  {
    CheckOutcome c;
    c.name = "gldim-symmetry";
    c.samples = 1;
    int cap = default_dim_cap(a);
    DimResult g = gldim(a, cap);
    DimResult go = gldim(op, cap);
    if (g.value != go.value || g.above_cap != go.above_cap) {
      c.pass = false;
      std::ostringstream w;
      w << "gldim " << g.value << (g.above_cap ? "+" : "") << " vs opposite "
        << go.value << (go.above_cap ? "+" : "");
      c.witness = w.str();
    }
    add(c, true);
  }

  // (vi) The double dual sequence is exact: Euler characteristic zero and
  // the internal kernel/cokernel certificates hold.
  {
    CheckOutcome c;
    c.name = "double-dual-exactness";
    for (int i = 0; i < samples; ++i) {
      Representation m = random_module(a, sub_seed(seed, 6, i), 3);
      ++c.samples;
      try {
        DoubleDualSequence dd = double_dual_sequence(m);
        int euler = dd.e1.total_dim() - m.total_dim() +
                    dd.double_star.total_dim() - dd.e2.total_dim();
        if (c.pass && euler != 0) {
          c.pass = false;
          c.witness = "module " + dims_string(m);
        }
      } catch (const Error& e) {
        if (c.pass) {
          c.pass = false;
          c.witness = "module " + dims_string(m) + ": " + e.what();
        }
      }
    }
    add(c, true);
  }

  // (vii) Section and retraction solvability agree on sampled n-exact
  // sequences built from injective morphisms and their n-cokernels.
  {
    CheckOutcome c;
    c.name = "splitting-agreement";
    std::mt19937_64 rng(sub_seed(seed, 7, 0));
    int attempts = 0;
    while (c.samples < samples && attempts < 20 * samples) {
      ++attempts;
      ProjMatrix f = random_projmatrix(a, rng, 2);
      ModuleMap realized =
          realize_projmatrix(f, make_proj_sum(a, f.row_vertices),
                             make_proj_sum(a, f.col_vertices));
      if (!realized_injective(realized)) continue;
      SequenceOfProjectives seq;
      try {
        seq = n_cokernel(f, n);
      } catch (const Error&) {
        continue;  // no n-cokernel of this length
      }
      SequenceOfProjectives full;
      full.maps.push_back(f);
      full.maps.insert(full.maps.end(), seq.maps.begin(), seq.maps.end());
      if (!check_sequence(full, SequenceMode::NExact, n)) continue;
      ++c.samples;
      try {
        splits(full);
      } catch (const Error& e) {
        if (c.pass) {
          c.pass = false;
          c.witness = std::string(e.what()) + " for " + pm_to_string(f);
        }
      }
    }
    add(c, true);
  }

  return report;
}

}  // namespace nab
