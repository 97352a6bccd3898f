#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace nab {

// Error with a stable machine-readable code ("shape", "inadmissible", ...)
// alongside the human message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& what_)
      : std::runtime_error(what_), code(std::move(code_)) {}
};

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t characteristic = 0;  // 0 for Q, prime p otherwise

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint32_t p);

  bool operator==(const FieldSpec&) const = default;
};

// One exact scalar. Which member is meaningful depends on the ambient
// FieldSpec: rationals use q (always canonicalized, positive denominator),
// prime fields use r in [0, p).
struct Scalar {
  mpq_class q{0};
  std::uint64_t r = 0;
};

// Field-contextual scalar arithmetic. All results canonical.
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(spec) {}
  const FieldSpec& spec() const { return spec_; }
  bool is_rationals() const { return spec_.kind == FieldSpec::Kind::Rationals; }

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_long(1); }
  Scalar from_long(long v) const;
  // Accepts "n" or "n/d" with optional leading minus.
  Scalar from_string(const std::string& s) const;
  std::string to_string(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws Error("division-by-zero") on 0
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

 private:
  FieldSpec spec_;
};

}  // namespace nab
