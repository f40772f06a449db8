#include <doctest.h>

#include <random>

#include "hfs/cfk/region.hpp"
#include "hfs/f2/complex.hpp"
#include "hfs/f2/kernels.hpp"
#include "support/corpus.hpp"

using namespace hfs::f2;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::uint64_t> out(n, 0);
  std::bernoulli_distribution word_on(density);
  for (auto& w : out) {
    if (word_on(rng)) w = rng();
  }
  return out;
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(simd::available(simd::Backend::Scalar));
  CHECK(simd::kernels_for(simd::Backend::Scalar) == &simd::scalar_kernels());
  CHECK(simd::parse_backend("scalar") == simd::Backend::Scalar);
  CHECK_FALSE(simd::parse_backend("sse9").has_value());
}

TEST_CASE("every backend matches the scalar kernels word for word") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (auto backend : simd::available_backends()) {
    const auto& k = *simd::kernels_for(backend);
    CAPTURE(k.name);
    for (std::size_t words : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 33u, 100u}) {
      for (double density : {0.0, 0.05, 0.5, 1.0}) {
        for (int rep = 0; rep < 20; ++rep) {
          auto a = random_words(rng, words, density);
          auto b = random_words(rng, words, density);
          CHECK(k.highest_bit(a.data(), words) == ref.highest_bit(a.data(), words));
          CHECK(k.and_parity(a.data(), b.data(), words) == ref.and_parity(a.data(), b.data(), words));
          auto x = a, y = a;
          k.xor_into(x.data(), b.data(), words);
          ref.xor_into(y.data(), b.data(), words);
          CHECK(x == y);
        }
      }
    }
  }
}

TEST_CASE("highest bit finds single bits everywhere") {
  for (auto backend : simd::available_backends()) {
    const auto& k = *simd::kernels_for(backend);
    for (std::size_t bit = 0; bit < 64 * 9; ++bit) {
      std::vector<std::uint64_t> w(9, 0);
      w[bit / 64] = std::uint64_t{1} << (bit % 64);
      REQUIRE(k.highest_bit(w.data(), w.size()) == static_cast<std::ptrdiff_t>(bit));
    }
  }
}

TEST_CASE("whole reductions agree across backends") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const auto c = fixtures::random_f2(rng, 12);
    const auto sub = fixtures::random_subcomplex(c, rng);
    const auto ref_ranks = homology_ranks(c, simd::scalar_kernels());
    const auto ref_map = connecting_homomorphism(c, sub, simd::scalar_kernels());
    for (auto backend : simd::available_backends()) {
      const auto& k = *simd::kernels_for(backend);
      CHECK(homology_ranks(c, k) == ref_ranks);
      const auto map = connecting_homomorphism(c, sub, k);
      CHECK(map.matrix == ref_map.matrix);
      CHECK(map.kernel_witnesses() == ref_map.kernel_witnesses());
    }
  }
  // Large enough that columns span several AVX2 blocks.
  const auto big = hfs::cfk::extract(fixtures::corpus(1).front().complex, hfs::cfk::RegionSpec::vertical());
  for (auto backend : simd::available_backends()) {
    CHECK(total_homology_rank(big, *simd::kernels_for(backend)) == 1);
  }
}

TEST_CASE("wide random matrices reduce identically") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {63u, 64u, 65u, 130u, 300u, 700u}) {
    std::vector<Position> entries;
    std::bernoulli_distribution on(3.0 / static_cast<double>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (on(rng)) entries.emplace_back(r, c);
    const auto m = F2Matrix::from_entries(n, n, entries);
    const auto ref = rank(m, simd::scalar_kernels());
    for (auto backend : simd::available_backends()) {
      CHECK(rank(m, *simd::kernels_for(backend)) == ref);
    }
  }
}
