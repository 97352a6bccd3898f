#include "nabelian/report.hpp"

#include <chrono>
#include <cstdio>

namespace nab {

namespace {
double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}
}  // namespace

Json json_field(const FieldSpec& f) {
  Json j;
  if (f.kind == FieldSpec::Kind::Rationals) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "F";
    j["characteristic"] = f.characteristic;
  }
  return j;
}

Json json_dim(const DimResult& d) {
  Json j;
  j["above_cap"] = d.above_cap;
  if (!d.above_cap) j["value"] = d.value;
  return j;
}

Json json_domdim(const DomdimResult& d) {
  Json j;
  switch (d.kind) {
    case DomdimResult::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = d.value;
      break;
    case DomdimResult::Kind::Infinite:
      j["kind"] = "infinite";
      break;
    case DomdimResult::Kind::AtLeastCap:
      j["kind"] = "at-least-cap";
      j["value"] = d.value;
      break;
  }
  return j;
}

Json json_verdict(const NAbelianVerdict& v) {
  Json j;
  switch (v.kind) {
    case NAbelianVerdict::Kind::AllN:
      j["kind"] = "AllN";
      break;
    case NAbelianVerdict::Kind::ExactlyN:
      j["kind"] = "ExactlyN";
      j["n"] = v.n;
      break;
    case NAbelianVerdict::Kind::NotNAbelianUpTo:
      j["kind"] = "NotNAbelianUpTo";
      break;
  }
  j["cap"] = v.cap;
  j["gldim"] = json_dim(v.gl);
  j["domdim"] = json_domdim(v.dom);
  j["justification"] = v.justification;
  return j;
}

Json json_checks(const CrossCheckReport& r) {
  Json j;
  j["all_pass"] = r.all_pass;
  j["fatal"] = r.fatal;
  if (r.fatal) j["fatal_reason"] = r.fatal_reason;
  Json checks = Json::array();
  for (const CheckOutcome& c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["samples"] = c.samples;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(jc);
  }
  j["results"] = checks;
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

SectionTimer::SectionTimer(std::string name)
    : name_(std::move(name)), start_(now_seconds()) {}

SectionTimer::~SectionTimer() {
  std::fprintf(stderr, "[time] %s %.3fs\n", name_.c_str(),
               now_seconds() - start_);
}

}  // namespace nab
