#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "engel/field.hpp"

namespace engel {

// Sparse vector over F_p: (column, nonzero residue) pairs, strictly increasing columns.
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Incremental row space over F_p. Every stored row has a distinct leading column
// normalized to 1; the pivot is always the leftmost nonzero entry.
class RowEchelon {
 public:
  explicit RowEchelon(PrimeField field) : field_(field) {}

  const PrimeField& field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }

  // Adds v to the spanning set; true iff the rank grew.
  bool insert(const SparseRow& v);
  // The unique vector in v + rowspace that vanishes on every pivot column.
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }
  bool is_pivot(std::uint32_t col) const;

  // Reduced row-echelon form, rows sorted by pivot column.
  std::vector<SparseRow> rref() const;
  std::vector<std::uint32_t> pivot_columns() const;

 private:
  PrimeField field_;
  std::vector<SparseRow> rows_;
  std::vector<std::int32_t> pivot_row_;  // column -> row index or -1
};

// Rank of a list of sparse rows.
std::size_t sparse_rank(PrimeField field, const std::vector<SparseRow>& rows);
// True iff both lists span the same row space.
bool same_row_space(PrimeField field, const std::vector<SparseRow>& a, const std::vector<SparseRow>& b);

// Dense square or rectangular matrix over F_p, row-major.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static ModMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzeros() const;

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix scaled(std::uint32_t c) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_{5};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

}  // namespace engel
