#pragma once

#include <optional>
#include <vector>

#include "nabelian/scalar.hpp"

namespace nab {

// Dense row-major matrix over Q or F_p. All module maps in this project act
// on row vectors (x -> x*A), so "kernel" always means the left kernel.
// Entries are kept canonical at all times.
class ExactMatrix {
 public:
  ExactMatrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
  ExactMatrix(FieldSpec field, int rows, int cols);

  static ExactMatrix identity(FieldSpec field, int n);
  static ExactMatrix zero(FieldSpec field, int rows, int cols) {
    return ExactMatrix(field, rows, cols);
  }

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& at(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, const Scalar& v);
  void set_long(int r, int c, long v);

  ExactMatrix transpose() const;
  ExactMatrix mul(const ExactMatrix& other) const;      // this * other
  ExactMatrix add(const ExactMatrix& other) const;
  ExactMatrix sub(const ExactMatrix& other) const;
  ExactMatrix scaled(const Scalar& s) const;
  ExactMatrix neg() const;
  bool eq(const ExactMatrix& other) const;
  bool is_zero() const;

  // Rows of `other` appended below this matrix (same column count).
  ExactMatrix vstack(const ExactMatrix& other) const;
  // Columns of `other` appended to the right (same row count).
  ExactMatrix hstack(const ExactMatrix& other) const;
  ExactMatrix row(int r) const;
  // Copies `src` into this matrix with its (0,0) at (r0,c0).
  void paste(const ExactMatrix& src, int r0, int c0);
  ExactMatrix slice(int r0, int rcount, int c0, int ccount) const;

 private:
  int index(int r, int c) const { return r * cols_ + c; }
  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix r;
  std::vector<int> pivots;  // pivot columns, increasing
  int rank = 0;
};

// Unique reduced row echelon form.
RrefResult rref(const ExactMatrix& a);

int rank(const ExactMatrix& a);

// Basis of the left kernel {x : x*A = 0}, rows in RREF; row count equals
// rows(A) - rank(A).
ExactMatrix kernel_basis(const ExactMatrix& a);

// One X with X*A = B when solvable (free variables zero in RREF coordinates),
// nullopt otherwise. Throws Error("shape") on dimension or field mismatch.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

// True when every row of `rows` lies in the row space of `space`.
bool rows_contained(const ExactMatrix& space, const ExactMatrix& rows);

bool is_invertible(const ExactMatrix& a);

}  // namespace nab
