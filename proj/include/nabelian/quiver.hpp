#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabelian/scalar.hpp"

namespace nab {

struct Arrow {
  std::string label;
  int src = 0;
  int dst = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int arrow_count() const { return static_cast<int>(arrows.size()); }
  std::optional<int> vertex_index(const std::string& label) const;
  std::optional<int> arrow_index(const std::string& label) const;
  // Same vertices, every arrow's endpoints swapped, declaration order kept.
  Quiver reversed() const;
  // Throws on duplicate labels or dangling endpoints.
  void validate() const;
};

// A path in the quiver. Arrows compose left to right: the word (a, b) is the
// path "first a, then b", so it requires dst(a) == src(b). Trivial paths have
// an empty word and source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  static Path trivial_at(int v) { return Path{v, v, {}}; }
};

bool operator==(const Path& a, const Path& b);

// Length-lexicographic order: shorter paths first, ties broken by the arrow
// index word, trivial paths by vertex. This is a multiplication-compatible
// monomial order on parallel paths.
struct PathLess {
  bool operator()(const Path& a, const Path& b) const;
};

// Concatenation p then q; requires p.target == q.source.
Path compose_paths(const Path& p, const Path& q);

// The same word read backwards, a path of the reversed quiver.
Path reversed_path(const Path& p);

std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace nab
