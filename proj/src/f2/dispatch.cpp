#include <atomic>

#include "hfs/f2/kernels.hpp"

namespace hfs::f2::simd {
namespace {

bool cpu_supports(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(HFS_WITH_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::Neon:
#if defined(HFS_WITH_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Kernels* best() {
#if defined(HFS_WITH_AVX2)
  if (cpu_supports(Backend::Avx2)) return &avx2_kernels();
#endif
#if defined(HFS_WITH_NEON)
  return &neon_kernels();
#endif
  return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> current{best()};
  return current;
}

}  // namespace

bool available(Backend backend) { return cpu_supports(backend); }

const Kernels* kernels_for(Backend backend) {
  if (!cpu_supports(backend)) return nullptr;
  switch (backend) {
    case Backend::Scalar:
      return &scalar_kernels();
    case Backend::Avx2:
#if defined(HFS_WITH_AVX2)
      return &avx2_kernels();
#else
      return nullptr;
#endif
    case Backend::Neon:
#if defined(HFS_WITH_NEON)
      return &neon_kernels();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

bool select(Backend backend) {
  const Kernels* table = kernels_for(backend);
  if (table == nullptr) return false;
  slot().store(table, std::memory_order_release);
  return true;
}

void select_best() { slot().store(best(), std::memory_order_release); }

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (available(b)) out.push_back(b);
  }
  return out;
}

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::Scalar;
  if (name == "avx2") return Backend::Avx2;
  if (name == "neon") return Backend::Neon;
  return std::nullopt;
}

}  // namespace hfs::f2::simd
