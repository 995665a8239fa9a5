#pragma once

#include <cstdint>
#include <vector>

#include "gorcol/field.hpp"

namespace gorcol {

/// Dense row-major matrix over a single field context.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Field& f);
  static DenseMatrix from_rows(const Field& f, std::size_t cols,
                               const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;

  /// Validates the field context of every entry in the row.
  void append_row(const std::vector<Scalar>& row);

  std::vector<Scalar> row(std::size_t i) const;

  bool operator==(const DenseMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form of a row space: zero rows dropped, pivots 1,
/// pivot columns strictly increasing and cleared elsewhere. Canonical for
/// the row space, so two spans are equal iff their Echelons are equal.
struct Echelon {
  DenseMatrix mat;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
  std::size_t cols() const { return mat.cols(); }

  /// Reduces v in place modulo the row space; returns true iff the
  /// remainder is zero (v was in the span).
  bool reduce(std::vector<Scalar>& v) const;

  bool operator==(const Echelon& o) const { return pivots == o.pivots && mat == o.mat; }
};

/// Incremental RREF accumulator. Insertion order does not affect the final
/// echelon (RREF of a row space is unique).
class EchelonBuilder {
 public:
  EchelonBuilder(const Field& f, std::size_t cols);

  /// Reduces v against the current rows; if a nonzero remainder is left it
  /// is normalized and inserted. Returns true iff the rank grew.
  bool insert(std::vector<Scalar> v);

  bool contains(std::vector<Scalar> v) const;
  /// Remainder of v after reduction (not inserted).
  std::vector<Scalar> remainder(std::vector<Scalar> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }
  const Field& field() const { return field_; }

  Echelon to_echelon() const;

 private:
  void reduce_in_place(std::vector<Scalar>& v) const;

  Field field_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

Echelon rref(const DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// Canonical (echelonized, leading coefficients 1) basis of the right
/// kernel {v : M v = 0}. Size is cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m);

/// True iff v lies in the row span of m. The zero vector is in every span.
bool row_space_membership(const DenseMatrix& m, const std::vector<Scalar>& v);

/// Lean incremental row echelon over GF(p) for certified-rank work on
/// integer matrices (p < 2^31, entries reduced on insertion). Forward
/// elimination only; tracks rank, not the reduced form.
class FpEchelon {
 public:
  FpEchelon(std::uint64_t p, std::size_t cols);

  /// Inserts a row given as sparse (column, value) pairs with values
  /// already in [0, p). Returns true iff the rank grew.
  bool insert(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& sparse_row);

  std::size_t rank() const { return rank_; }
  std::size_t cols() const { return cols_; }
  bool full() const { return rank_ == cols_; }

 private:
  std::uint64_t p_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;   // normalized, indexed by pivot slot
  std::vector<std::int64_t> pivot_row_;            // column -> row index or -1
  std::vector<std::uint64_t> scratch_;
};

}  // namespace gorcol
