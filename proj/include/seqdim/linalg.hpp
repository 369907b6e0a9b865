#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "seqdim/rational.hpp"

namespace seqdim {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  bool is_zero() const;

  /// Matrix made of the listed columns, in the given order.
  RatMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatVector multiply(const RatMatrix& m, std::span<const Rational> v);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel, one vector per free column. Each vector has
/// coprime integer entries and satisfies m * v = 0 exactly.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Dimension of the image of ker(m) under projection onto `coords`.
std::size_t projected_kernel_dim(const RatMatrix& m,
                                 std::span<const std::size_t> coords);

Rational determinant(const RatMatrix& m);

/// Incremental row-echelon basis for sparse rows. Rows are processed by
/// leading column, so banded systems stay banded.
class SparseEchelon {
 public:
  /// (column, value) pairs sorted by column, no zero values.
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  /// Reduces `row` against the basis; stores it if it is independent.
  bool insert(Row row);

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;  // leading column -> monic row
};

std::size_t sparse_rank(std::vector<SparseEchelon::Row> rows);

}  // namespace seqdim
