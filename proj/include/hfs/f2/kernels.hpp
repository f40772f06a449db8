#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

// Word-level GF(2) kernels. Every backend computes bit-identical results;
// the scalar table is the reference the vector variants are tested against.
namespace hfs::f2::simd {

enum class Backend { Scalar, Avx2, Neon };

struct Kernels {
  Backend backend;
  std::string_view name;
  // dst[k] ^= src[k] for k < words.
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // Index of the highest set bit, or -1 when every word is zero.
  std::ptrdiff_t (*highest_bit)(const std::uint64_t* words, std::size_t count);
  // Parity of popcount(a & b): the GF(2) dot product.
  bool (*and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const Kernels& scalar_kernels();
#if defined(HFS_WITH_AVX2)
const Kernels& avx2_kernels();
#endif
#if defined(HFS_WITH_NEON)
const Kernels& neon_kernels();
#endif

/// Compiled in and supported by the running CPU.
bool available(Backend backend);
const Kernels* kernels_for(Backend backend);

/// Currently selected table. First use picks the widest available backend.
const Kernels& active();

/// Overrides runtime selection process-wide. Returns false (and changes
/// nothing) when the backend is not available here.
bool select(Backend backend);
void select_best();

std::vector<Backend> available_backends();
std::string_view to_string(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

}  // namespace hfs::f2::simd
