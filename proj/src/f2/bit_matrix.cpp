#include <stdexcept>

#include "hfs/f2/matrix.hpp"

namespace hfs::f2 {

namespace {
constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(rows)), bits_(stride_ * cols, 0) {}

BitMatrix BitMatrix::from_sparse(const F2Matrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r : m.column(c)) out.set(r, c, true);
  }
  return out;
}

F2Matrix BitMatrix::to_sparse() const {
  F2Matrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (get(r, c)) out.set(r, c, true);
    }
  }
  return out;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("BitMatrix::set");
  auto& word = bits_[col * stride_ + row / 64];
  const std::uint64_t mask = std::uint64_t{1} << (row % 64);
  word = value ? (word | mask) : (word & ~mask);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b, const simd::Kernels& k) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  // (ab)(r, c) = <row r of a, column c of b>; rows of a are columns of a^T.
  const BitMatrix at = a.transpose();
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    const auto bc = b.column(c);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (k.and_parity(at.column(r).data(), bc.data(), bc.size())) out.set(r, c, true);
    }
  }
  return out;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b, const simd::Kernels& k) {
  return multiply(BitMatrix::from_sparse(a), BitMatrix::from_sparse(b), k).to_sparse();
}

std::size_t rank(const F2Matrix& m, const simd::Kernels& k) {
  BitMatrix work = BitMatrix::from_sparse(m);
  std::vector<std::ptrdiff_t> owner(m.rows(), -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < work.cols(); ++c) {
    for (std::ptrdiff_t low = work.low(c, k); low >= 0; low = work.low(c, k)) {
      if (owner[static_cast<std::size_t>(low)] < 0) {
        owner[static_cast<std::size_t>(low)] = static_cast<std::ptrdiff_t>(c);
        ++r;
        break;
      }
      work.add_column(c, static_cast<std::size_t>(owner[static_cast<std::size_t>(low)]), k);
    }
  }
  return r;
}

std::vector<std::vector<std::size_t>> kernel_basis(const F2Matrix& m, const simd::Kernels& k) {
  BitMatrix work = BitMatrix::from_sparse(m);
  BitMatrix track(m.cols(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) track.set(c, c, true);
  std::vector<std::ptrdiff_t> owner(m.rows(), -1);
  std::vector<std::vector<std::size_t>> basis;
  for (std::size_t c = 0; c < work.cols(); ++c) {
    std::ptrdiff_t low = work.low(c, k);
    while (low >= 0 && owner[static_cast<std::size_t>(low)] >= 0) {
      const auto src = static_cast<std::size_t>(owner[static_cast<std::size_t>(low)]);
      work.add_column(c, src, k);
      track.add_column(c, src, k);
      low = work.low(c, k);
    }
    if (low >= 0) {
      owner[static_cast<std::size_t>(low)] = static_cast<std::ptrdiff_t>(c);
      continue;
    }
    std::vector<std::size_t> vec;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (track.get(j, c)) vec.push_back(j);
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace hfs::f2
