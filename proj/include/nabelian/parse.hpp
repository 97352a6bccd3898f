#pragma once

#include <string>
#include <vector>

#include "nabelian/nabelian.hpp"

namespace nab {

struct NamedModule {
  std::string name;
  Representation rep;
};

// An algebra description plus the module blocks declared in the same file.
struct ParsedFile {
  AlgebraPtr algebra;
  std::vector<NamedModule> modules;
};

// Line-oriented text format (see docs/file-format.md): `field`, `vertex`,
// `arrow`, `relation` lines followed by optional `module` blocks. Throws
// Error("parse", "line N: ...") with 1-based line numbers.
ParsedFile parse_algebra_text(const std::string& text, int degree_cap = 20);
ParsedFile parse_algebra_file(const std::string& path, int degree_cap = 20);

// Module declared in the file; Error("unknown-module") when absent.
const Representation& find_module(const ParsedFile& file,
                                  const std::string& name);

// Morphism literal `P(i+j+..)->P(k+..): [[entry,...],...]` with one row per
// source summand; entries are linear combinations of arrow words (`a*b`),
// trivial paths (`e_<vertex>`), or `0`.
ProjMatrix parse_map_spec(const AlgebraPtr& a, const std::string& spec);

}  // namespace nab
