#include "hfs/f2/kernels.hpp"

#include <bit>

namespace hfs::f2::simd {
namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) dst[k] ^= src[k];
}

std::ptrdiff_t highest_bit_scalar(const std::uint64_t* words, std::size_t count) {
  for (std::size_t k = count; k-- > 0;) {
    if (words[k] != 0) {
      return static_cast<std::ptrdiff_t>(k * 64 + 63 - std::countl_zero(words[k]));
    }
  }
  return -1;
}

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words; ++k) acc ^= a[k] & b[k];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{Backend::Scalar, "scalar", &xor_into_scalar, &highest_bit_scalar,
                             &and_parity_scalar};
  return table;
}

}  // namespace hfs::f2::simd
