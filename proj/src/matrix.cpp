#include "nabelian/matrix.hpp"

#include <cstdlib>

namespace nab {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw Error("bad-field", "characteristic must be a prime below 2^31");
  return FieldSpec{Kind::PrimeField, p};
}

Scalar Field::from_long(long v) const {
  Scalar s;
  if (is_rationals()) {
    s.q = mpq_class(v);
  } else {
    long p = static_cast<long>(spec_.characteristic);
    long m = v % p;
    if (m < 0) m += p;
    s.r = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::from_string(const std::string& str) const {
  std::string num = str, den = "1";
  if (auto pos = str.find('/'); pos != std::string::npos) {
    num = str.substr(0, pos);
    den = str.substr(pos + 1);
  }
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
    throw Error("bad-scalar", "cannot parse scalar '" + str + "'");
  if (is_rationals()) {
    Scalar s;
    s.q = mpq_class(n) / mpq_class(d);
    s.q.canonicalize();
    return s;
  }
  mpz_class p(static_cast<unsigned long>(spec_.characteristic));
  mpz_class nm = n % p, dm = d % p;
  if (nm < 0) nm += p;
  if (dm < 0) dm += p;
  if (dm == 0) throw Error("bad-scalar", "denominator vanishes mod p in '" + str + "'");
  Scalar s;
  std::uint64_t dn = dm.get_ui();
  s.r = nm.get_ui() * pow_mod(dn, spec_.characteristic - 2, spec_.characteristic) %
        spec_.characteristic;
  return s;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rationals()) return a.q.get_str();
  return std::to_string(a.r);
}

bool Field::is_zero(const Scalar& a) const {
  return is_rationals() ? a.q == 0 : a.r == 0;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
  return is_rationals() ? a.q == b.q : a.r == b.r;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (is_rationals()) {
    s.q = a.q + b.q;
    s.q.canonicalize();
  } else {
    s.r = (a.r + b.r) % spec_.characteristic;
  }
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (is_rationals()) {
    s.q = a.q - b.q;
    s.q.canonicalize();
  } else {
    s.r = (a.r + spec_.characteristic - b.r) % spec_.characteristic;
  }
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (is_rationals()) {
    s.q = a.q * b.q;
    s.q.canonicalize();
  } else {
    s.r = a.r * b.r % spec_.characteristic;
  }
  return s;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar s;
  if (is_rationals()) {
    s.q = -a.q;
  } else {
    s.r = a.r == 0 ? 0 : spec_.characteristic - a.r;
  }
  return s;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division-by-zero", "inverse of zero");
  Scalar s;
  if (is_rationals()) {
    s.q = 1 / a.q;
    s.q.canonicalize();
  } else {
    s.r = pow_mod(a.r, spec_.characteristic - 2, spec_.characteristic);
  }
  return s;
}

ExactMatrix::ExactMatrix(FieldSpec field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols) {}

ExactMatrix ExactMatrix::identity(FieldSpec field, int n) {
  ExactMatrix m(field, n, n);
  Field f(field);
  for (int i = 0; i < n; ++i) m.set(i, i, f.one());
  return m;
}

void ExactMatrix::set(int r, int c, const Scalar& v) {
  Scalar s = v;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q.canonicalize();
  } else {
    s.r %= field_.characteristic;
  }
  data_[index(r, c)] = s;
}

void ExactMatrix::set_long(int r, int c, long v) {
  data_[index(r, c)] = Field(field_).from_long(v);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.data_[t.index(c, r)] = data_[index(r, c)];
  return t;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
  if (cols_ != other.rows_ || !(field_ == other.field_))
    throw Error("shape", "matrix product shape mismatch");
  Field f(field_);
  ExactMatrix out(field_, rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = data_[index(r, k)];
      if (f.is_zero(a)) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Scalar& b = other.data_[other.index(k, c)];
        if (f.is_zero(b)) continue;
        out.data_[out.index(r, c)] =
            f.add(out.data_[out.index(r, c)], f.mul(a, b));
      }
    }
  return out;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_))
    throw Error("shape", "matrix sum shape mismatch");
  Field f(field_);
  ExactMatrix out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = f.add(data_[i], other.data_[i]);
  return out;
}

ExactMatrix ExactMatrix::sub(const ExactMatrix& other) const {
  return add(other.neg());
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
  Field f(field_);
  ExactMatrix out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.mul(data_[i], s);
  return out;
}

ExactMatrix ExactMatrix::neg() const {
  Field f(field_);
  ExactMatrix out(field_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.neg(data_[i]);
  return out;
}

bool ExactMatrix::eq(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_))
    return false;
  Field f(field_);
  for (size_t i = 0; i < data_.size(); ++i)
    if (!f.eq(data_[i], other.data_[i])) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  Field f(field_);
  for (const auto& v : data_)
    if (!f.is_zero(v)) return false;
  return true;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& other) const {
  if (cols_ != other.cols_ || !(field_ == other.field_))
    throw Error("shape", "vstack column mismatch");
  ExactMatrix out(field_, rows_ + other.rows_, cols_);
  out.paste(*this, 0, 0);
  out.paste(other, rows_, 0);
  return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || !(field_ == other.field_))
    throw Error("shape", "hstack row mismatch");
  ExactMatrix out(field_, rows_, cols_ + other.cols_);
  out.paste(*this, 0, 0);
  out.paste(other, 0, cols_);
  return out;
}

ExactMatrix ExactMatrix::row(int r) const { return slice(r, 1, 0, cols_); }

void ExactMatrix::paste(const ExactMatrix& src, int r0, int c0) {
  for (int r = 0; r < src.rows_; ++r)
    for (int c = 0; c < src.cols_; ++c)
      data_[index(r0 + r, c0 + c)] = src.data_[src.index(r, c)];
}

ExactMatrix ExactMatrix::slice(int r0, int rcount, int c0, int ccount) const {
  ExactMatrix out(field_, rcount, ccount);
  for (int r = 0; r < rcount; ++r)
    for (int c = 0; c < ccount; ++c)
      out.data_[out.index(r, c)] = data_[index(r0 + r, c0 + c)];
  return out;
}

RrefResult rref(const ExactMatrix& a) {
  RrefResult res;
  res.r = a;
  Field f(a.field());
  ExactMatrix& m = res.r;
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int pivot = -1;
    for (int r = lead; r < m.rows(); ++r)
      if (!f.is_zero(m.at(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int cc = 0; cc < m.cols(); ++cc) {
        Scalar tmp = m.at(pivot, cc);
        m.set(pivot, cc, m.at(lead, cc));
        m.set(lead, cc, tmp);
      }
    Scalar iv = f.inv(m.at(lead, c));
    for (int cc = c; cc < m.cols(); ++cc) m.set(lead, cc, f.mul(m.at(lead, cc), iv));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || f.is_zero(m.at(r, c))) continue;
      Scalar factor = m.at(r, c);
      for (int cc = c; cc < m.cols(); ++cc)
        m.set(r, cc, f.sub(m.at(r, cc), f.mul(factor, m.at(lead, cc))));
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

int rank(const ExactMatrix& a) { return rref(a).rank; }

ExactMatrix kernel_basis(const ExactMatrix& a) {
  // Left kernel: row vectors x with x*A = 0, i.e. the null space of A^T.
  ExactMatrix t = a.transpose();
  RrefResult rr = rref(t);
  int n = a.rows();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  Field f(a.field());
  ExactMatrix basis(a.field(), n - rr.rank, n);
  int row = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(row, free, f.one());
    for (int k = 0; k < rr.rank; ++k)
      basis.set(row, rr.pivots[k], f.neg(rr.r.at(k, free)));
    ++row;
  }
  // The construction above is a basis but not necessarily in RREF; normalize.
  return rref(basis).r;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error("shape", "solve: field mismatch");
  if (a.cols() != b.cols())
    throw Error("shape", "solve: X*A = B needs cols(A) == cols(B)");
  // Transpose to the right-system A^T X^T = B^T and eliminate the augmented
  // matrix [A^T | B^T].
  ExactMatrix at = a.transpose();
  ExactMatrix bt = b.transpose();
  RrefResult rr = rref(at.hstack(bt));
  Field f(a.field());
  int n = a.rows();
  ExactMatrix xt(a.field(), n, b.rows());
  for (size_t k = 0; k < rr.pivots.size(); ++k) {
    int c = rr.pivots[k];
    if (c >= n) return std::nullopt;  // pivot in the augmented part: inconsistent
    for (int j = 0; j < b.rows(); ++j) xt.set(c, j, rr.r.at(static_cast<int>(k), n + j));
  }
  ExactMatrix x = xt.transpose();
  return x;
}

bool rows_contained(const ExactMatrix& space, const ExactMatrix& rows) {
  if (rows.rows() == 0) return true;
  if (space.rows() == 0) return rows.is_zero();
  return rank(space) == rank(space.vstack(rows));
}

bool is_invertible(const ExactMatrix& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

}  // namespace nab
