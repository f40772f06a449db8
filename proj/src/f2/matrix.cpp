#include <algorithm>
#include <string>

#include "hfs/error.hpp"
#include "hfs/f2/matrix.hpp"

namespace hfs::f2 {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

F2Matrix F2Matrix::from_entries(std::size_t rows, std::size_t cols,
                                std::span<const Position> entries) {
  F2Matrix m(rows, cols);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) {
      throw Error(ErrorKind::ValidationError, "entry (" + std::to_string(r) + ", " +
                                                  std::to_string(c) + ") outside " +
                                                  std::to_string(rows) + "x" +
                                                  std::to_string(cols));
    }
    auto& col = m.columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r);
    if (it != col.end() && *it == r) {
      throw Error(ErrorKind::ValidationError,
                  "duplicate entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
    col.insert(it, r);
  }
  return m;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back(i);
  return m;
}

bool F2Matrix::get(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

void F2Matrix::set(std::size_t row, std::size_t col, bool value) {
  if (get(row, col) != value) flip(row, col);
}

void F2Matrix::flip(std::size_t row, std::size_t col) {
  if (row >= rows_) throw std::out_of_range("F2Matrix::flip row");
  auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row);
  if (it != c.end() && *it == row) {
    c.erase(it);
  } else {
    c.insert(it, row);
  }
}

std::vector<Position> F2Matrix::entries() const {
  std::vector<Position> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (std::size_t r : columns_[c]) out.emplace_back(r, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t F2Matrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool F2Matrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (std::size_t r : columns_[c]) t.columns_[r].push_back(c);
  }
  return t;
}

}  // namespace hfs::f2
