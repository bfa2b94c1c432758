#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmds/gf.hpp"

namespace qmds {

/// Thrown by invert() on a singular input; carries the rank deficit.
class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix(std::size_t size, std::size_t rank);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t deficit() const noexcept { return size_ - rank_; }

 private:
  std::size_t size_;
  std::size_t rank_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over GF(q).  Entries are kept as reduced raw
/// values; the field travels with the matrix.
class MatrixGF {
 public:
  MatrixGF(const Field& field, std::size_t rows, std::size_t cols);
  /// Row-list literal; values are reduced mod q.
  MatrixGF(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static MatrixGF identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  FieldElement at(std::size_t r, std::size_t c) const;
  /// Stores `value mod q`.
  void set(std::size_t r, std::size_t c, std::int64_t value);
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

  MatrixGF transpose() const;
  MatrixGF columns(std::span<const std::size_t> indices) const;
  MatrixGF row_block(std::size_t first, std::size_t count) const;

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

MatrixGF operator*(const MatrixGF& lhs, const MatrixGF& rhs);
/// [lhs | rhs]
MatrixGF hconcat(const MatrixGF& lhs, const MatrixGF& rhs);
/// (top; bottom)
MatrixGF vconcat(const MatrixGF& top, const MatrixGF& bottom);

struct RrefResult {
  MatrixGF reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.  Pivot choice is the first nonzero entry at or
/// below the current row, so the output is deterministic.
RrefResult rref(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);
MatrixGF invert(const MatrixGF& m);

/// dim(<U> ∩ <V>) for the column spaces of U and V, via
/// rank(U) + rank(V) - rank([U | V]).
std::size_t intersection_dim(const MatrixGF& u, const MatrixGF& v);

/// Row vector times matrix, x·M.
std::vector<std::uint32_t> mat_vec(std::span<const std::uint32_t> x, const MatrixGF& m);
std::vector<FieldElement> mat_vec(std::span<const FieldElement> x, const MatrixGF& m);

std::string to_string(const MatrixGF& m);

}  // namespace qmds
