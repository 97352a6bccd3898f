#pragma once

#include <string>

#include "json.hpp"
#include "nabelian/nabelian.hpp"

namespace nab {

using Json = nlohmann::json;

// JSON views of the computed invariants. Keys come out sorted and every
// scalar is either an integer, a boolean, or an exact string, so equal
// inputs render to identical bytes.
Json json_field(const FieldSpec& f);
Json json_dim(const DimResult& d);
Json json_domdim(const DomdimResult& d);
Json json_verdict(const NAbelianVerdict& v);
Json json_checks(const CrossCheckReport& r);

// Two-space indent plus trailing newline.
std::string render_json(const Json& j);

// Wall-clock section timing, reported on stderr so the stdout report stays
// deterministic.
class SectionTimer {
 public:
  explicit SectionTimer(std::string name);
  ~SectionTimer();
  SectionTimer(const SectionTimer&) = delete;
  SectionTimer& operator=(const SectionTimer&) = delete;

 private:
  std::string name_;
  double start_;
};

}  // namespace nab
