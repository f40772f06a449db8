#include "hfs/f2/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace hfs::f2::simd {
namespace {

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t k = 0;
  for (; k + 2 <= words; k += 2) {
    vst1q_u64(dst + k, veorq_u64(vld1q_u64(dst + k), vld1q_u64(src + k)));
  }
  for (; k < words; ++k) dst[k] ^= src[k];
}

std::ptrdiff_t highest_bit_neon(const std::uint64_t* words, std::size_t count) {
  std::size_t k = count;
  if (k % 2 != 0) {
    --k;
    if (words[k] != 0) {
      return static_cast<std::ptrdiff_t>(k * 64 + 63 - std::countl_zero(words[k]));
    }
  }
  while (k >= 2) {
    k -= 2;
    const uint64x2_t block = vld1q_u64(words + k);
    if ((vgetq_lane_u64(block, 0) | vgetq_lane_u64(block, 1)) != 0) {
      for (std::size_t w = k + 2; w-- > k;) {
        if (words[w] != 0) {
          return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words[w]));
        }
      }
    }
  }
  return -1;
}

bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= words; k += 2) {
    acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + k), vld1q_u64(b + k)));
  }
  std::uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
  for (; k < words; ++k) folded ^= a[k] & b[k];
  return (std::popcount(folded) & 1) != 0;
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels table{Backend::Neon, "neon", &xor_into_neon, &highest_bit_neon,
                             &and_parity_neon};
  return table;
}

}  // namespace hfs::f2::simd
