#include "gorcol/matrix.hpp"

#include <algorithm>

namespace gorcol {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

DenseMatrix DenseMatrix::from_rows(const Field& f, std::size_t cols,
                                   const std::vector<std::vector<Scalar>>& rows) {
  DenseMatrix m(0, cols, f);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Scalar& DenseMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return entries_[i * cols_ + j];
}

const Scalar& DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return entries_[i * cols_ + j];
}

void DenseMatrix::append_row(const std::vector<Scalar>& row) {
  if (row.size() != cols_) throw DimensionError("row width does not match matrix");
  for (const auto& s : row) {
    if (s.field() != field_)
      throw FieldMismatchError("matrix entry from a different field context");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Scalar> DenseMatrix::row(std::size_t i) const {
  if (i >= rows_) throw DimensionError("row index out of range");
  return std::vector<Scalar>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != o.entries_[k]) return false;
  return true;
}

bool Echelon::reduce(std::vector<Scalar>& v) const {
  if (v.size() != mat.cols()) throw DimensionError("vector length does not match echelon");
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Scalar& c = v[pivots[r]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are 1
    for (std::size_t j = pivots[r]; j < v.size(); ++j) {
      const Scalar& e = mat.at(r, j);
      if (!e.is_zero()) v[j] -= f * e;
    }
  }
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

EchelonBuilder::EchelonBuilder(const Field& f, std::size_t cols) : field_(f), cols_(cols) {}

void EchelonBuilder::reduce_in_place(std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match builder");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    const auto& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < cols_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
}

bool EchelonBuilder::insert(std::vector<Scalar> v) {
  for (const auto& s : v)
    if (s.field() != field_) throw FieldMismatchError("vector from a different field context");
  reduce_in_place(v);
  std::size_t p = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  }
  if (p == cols_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < cols_; ++j)
    if (!v[j].is_zero()) v[j] = v[j] * inv;
  // clear the new pivot column in existing rows to keep the reduced form
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][p];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (std::size_t j = p; j < cols_; ++j)
      if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool EchelonBuilder::contains(std::vector<Scalar> v) const {
  reduce_in_place(v);
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> EchelonBuilder::remainder(std::vector<Scalar> v) const {
  reduce_in_place(v);
  return v;
}

Echelon EchelonBuilder::to_echelon() const {
  DenseMatrix m(0, cols_, field_);
  for (const auto& r : rows_) m.append_row(r);
  return Echelon{std::move(m), pivots_};
}

Echelon rref(const DenseMatrix& m) {
  EchelonBuilder b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.insert(m.row(i));
  return b.to_echelon();
}

std::size_t rank(const DenseMatrix& m) { return rref(m).rank(); }

std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.mat.at(r, f);
    raw.push_back(std::move(v));
  }
  // canonicalize so the output does not depend on the pivot structure
  EchelonBuilder b(m.field(), m.cols());
  for (auto& v : raw) b.insert(std::move(v));
  Echelon k = b.to_echelon();
  std::vector<std::vector<Scalar>> out;
  out.reserve(k.rank());
  for (std::size_t i = 0; i < k.rank(); ++i) out.push_back(k.mat.row(i));
  return out;
}

bool row_space_membership(const DenseMatrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.cols()) throw DimensionError("vector length does not match matrix");
  std::vector<Scalar> w = v;
  return rref(m).reduce(w);
}

namespace {

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw ArithmeticError("element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FpEchelon::FpEchelon(std::uint64_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_row_(cols, -1), scratch_(cols, 0) {}

bool FpEchelon::insert(const std::vector<std::pair<std::uint32_t, std::uint64_t>>& sparse_row) {
  std::fill(scratch_.begin(), scratch_.end(), 0);
  for (auto [c, v] : sparse_row) {
    if (c >= cols_) throw DimensionError("sparse column out of range");
    scratch_[c] = (scratch_[c] + v) % p_;
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    std::uint64_t v = scratch_[j];
    if (v == 0) continue;
    std::int64_t r = pivot_row_[j];
    if (r < 0) {
      // normalize so the pivot is 1
      std::uint64_t inv = fp_inverse(v, p_);
      std::vector<std::uint64_t> row(scratch_.begin() + static_cast<std::ptrdiff_t>(j),
                                     scratch_.end());
      for (auto& x : row) x = (x * inv) % p_;
      pivot_row_[j] = static_cast<std::int64_t>(rows_.size());
      rows_.push_back(std::move(row));
      ++rank_;
      return true;
    }
    const auto& row = rows_[static_cast<std::size_t>(r)];
    std::uint64_t f = p_ - v;  // scratch += f * row, i.e. scratch -= v * row
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) scratch_[j + k] = (scratch_[j + k] + f * row[k]) % p_;
    }
  }
  return false;
}

}  // namespace gorcol
