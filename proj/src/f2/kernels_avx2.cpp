// Compiled with -mavx2; only reached after a runtime CPU check.
#include "hfs/f2/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace hfs::f2::simd {
namespace {

void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t k = 0;
  for (; k + 8 <= words; k += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst + k);
    const auto* s = reinterpret_cast<const __m256i*>(src + k);
    __m256i d0 = _mm256_loadu_si256(d);
    __m256i d1 = _mm256_loadu_si256(d + 1);
    d0 = _mm256_xor_si256(d0, _mm256_loadu_si256(s));
    d1 = _mm256_xor_si256(d1, _mm256_loadu_si256(s + 1));
    _mm256_storeu_si256(d, d0);
    _mm256_storeu_si256(d + 1, d1);
  }
  for (; k + 4 <= words; k += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + k);
    const auto* s = reinterpret_cast<const __m256i*>(src + k);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; k < words; ++k) dst[k] ^= src[k];
}

std::ptrdiff_t highest_bit_avx2(const std::uint64_t* words, std::size_t count) {
  std::size_t k = count;
  // Scalar tail first so the vector loop walks whole 4-word blocks downwards.
  while (k % 4 != 0) {
    --k;
    if (words[k] != 0) {
      return static_cast<std::ptrdiff_t>(k * 64 + 63 - std::countl_zero(words[k]));
    }
  }
  while (k >= 4) {
    k -= 4;
    const __m256i block = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + k));
    if (!_mm256_testz_si256(block, block)) {
      for (std::size_t w = k + 4; w-- > k;) {
        if (words[w] != 0) {
          return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words[w]));
        }
      }
    }
  }
  return -1;
}

bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; k < words; ++k) folded ^= a[k] & b[k];
  return (std::popcount(folded) & 1) != 0;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels table{Backend::Avx2, "avx2", &xor_into_avx2, &highest_bit_avx2,
                             &and_parity_avx2};
  return table;
}

}  // namespace hfs::f2::simd
