#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hfs/f2/kernels.hpp"

namespace hfs::f2 {

using Position = std::pair<std::size_t, std::size_t>;  // (row, col)

/// Sparse matrix over the two-element field. Column j holds the sorted row
/// indices of its nonzero entries.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  /// Throws ValidationError on an out-of-range or repeated position.
  static F2Matrix from_entries(std::size_t rows, std::size_t cols,
                               std::span<const Position> entries);
  static F2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);
  void flip(std::size_t row, std::size_t col);

  const std::vector<std::size_t>& column(std::size_t col) const { return columns_[col]; }

  /// All nonzero positions ordered by (row, col).
  std::vector<Position> entries() const;
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept;

  F2Matrix transpose() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::size_t>> columns_;
};

/// Dense column-major bit matrix; the working format for elimination.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix from_sparse(const F2Matrix& m);
  F2Matrix to_sparse() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_column() const noexcept { return stride_; }

  std::span<std::uint64_t> column(std::size_t col) {
    return {bits_.data() + col * stride_, stride_};
  }
  std::span<const std::uint64_t> column(std::size_t col) const {
    return {bits_.data() + col * stride_, stride_};
  }

  bool get(std::size_t row, std::size_t col) const {
    return ((bits_[col * stride_ + row / 64] >> (row % 64)) & 1U) != 0;
  }
  void set(std::size_t row, std::size_t col, bool value);

  /// column(dst) += column(src)
  void add_column(std::size_t dst, std::size_t src, const simd::Kernels& k) {
    k.xor_into(bits_.data() + dst * stride_, bits_.data() + src * stride_, stride_);
  }
  /// Largest row index with a 1 in the column, or -1.
  std::ptrdiff_t low(std::size_t col, const simd::Kernels& k) const {
    return k.highest_bit(bits_.data() + col * stride_, stride_);
  }

  BitMatrix transpose() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b,
                  const simd::Kernels& k = simd::active());
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b,
                   const simd::Kernels& k = simd::active());

std::size_t rank(const F2Matrix& m, const simd::Kernels& k = simd::active());

/// Basis of the right null space, each vector given by its nonzero column
/// indices. Deterministic for a given matrix.
std::vector<std::vector<std::size_t>> kernel_basis(const F2Matrix& m,
                                                   const simd::Kernels& k = simd::active());

}  // namespace hfs::f2
