#pragma once

#include "nichols/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nichols {

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(nullptr) {}
  Matrix(const Field* f, int rows, int cols)
      : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, f->zero()) {}

  static Matrix identity(const Field* f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field* field() const { return field_; }

  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  Matrix kronecker(const Matrix& o) const;
  bool is_identity() const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  const Field* field_;
  std::vector<Scalar> a_;
};

/// Sparse vector: sorted (index, coefficient) pairs, no explicit zeros.
struct SparseVec {
  std::vector<std::pair<uint32_t, Scalar>> t;

  void add(uint32_t i, const Scalar& c);
  SparseVec scaled(const Scalar& c) const;
  void accumulate(const SparseVec& o, const Scalar& c);
  void normalize(); // sort, merge, drop zeros
  bool empty() const { return t.empty(); }
};

/// Row echelon basis with remembered pivot columns; rows stay exact.
/// Used for span closures, membership tests and coordinate solves.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field* f) : field_(f) {}

  /// Reduces v against the basis; if a nonzero remainder survives it is
  /// inserted (pivot-normalized) and true is returned.
  bool insert(SparseVec v);

  /// Reduces v to coordinates in the stored rows; returns false if v is
  /// not in the span.
  bool coordinates(SparseVec v, std::vector<Scalar>& coords) const;

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

 private:
  const Field* field_;
  std::vector<SparseVec> rows_;
  std::vector<uint32_t> pivots_;
};

/// Rank by fraction-free Gaussian elimination (cross-multiplication updates,
/// first-nonzero pivoting, per-row content stripping in characteristic 0).
int rank_of(std::vector<SparseVec> rows, const Field* f);

int rank_of(const Matrix& m);

/// Nullspace dimension (cols - rank) plus a basis of solutions of M x = 0.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

} // namespace nichols
