#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hfs/f2/matrix.hpp"

namespace hfs::f2 {

struct GeneratorInfo {
  std::string label;
  int grading = 0;
  std::optional<int> maslov;

  friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

/// Finite chain complex over GF(2). Column j of the boundary is the
/// boundary of generator j. Shape and label uniqueness are checked on
/// construction; d^2 = 0 is checked by the operations that need it.
class GradedF2Complex {
 public:
  GradedF2Complex() = default;
  GradedF2Complex(std::vector<GeneratorInfo> generators, F2Matrix boundary);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<GeneratorInfo>& generators() const noexcept { return generators_; }
  const GeneratorInfo& generator(std::size_t i) const { return generators_.at(i); }
  const F2Matrix& boundary() const noexcept { return boundary_; }

  std::optional<std::size_t> index_of(const std::string& label) const;
  bool has_maslov() const noexcept;

  /// Subcomplex or quotient spanned by the listed generators, with the
  /// restricted differential, in the given order.
  GradedF2Complex restrict_to(std::span<const std::size_t> indices) const;

  friend bool operator==(const GradedF2Complex& a, const GradedF2Complex& b) {
    return a.generators_ == b.generators_ && a.boundary_ == b.boundary_;
  }

 private:
  std::vector<GeneratorInfo> generators_;
  F2Matrix boundary_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct DSquaredReport {
  bool ok = true;
  // (source, target) labels of the first nonzero entry of d o d, by
  // source index then target index.
  std::optional<std::pair<std::string, std::string>> violation;
};

DSquaredReport check_d_squared(const GradedF2Complex& c);

/// True iff every boundary entry connects maslov m to m - 1 (vacuous when
/// some generator has no maslov grading).
bool maslov_homogeneous(const GradedF2Complex& c);

struct HomologyClass {
  std::vector<std::string> cycle;  // representative, input generator labels
  int grading = 0;                 // filtration level at which the class is born
  std::optional<int> maslov;
};

/// Column-reduced form of a complex. Generators are processed in filtration
/// order (grading, then input index); pivots are the last nonzero row in
/// that order, so the reduction and the reported basis are reproducible.
class Reduction {
 public:
  explicit Reduction(const GradedF2Complex& c, const simd::Kernels& k = simd::active());

  std::size_t boundary_rank() const noexcept { return boundary_rank_; }
  std::size_t homology_rank() const noexcept { return essential_.size(); }

  /// Homology basis; representatives are explicit cycles.
  std::vector<HomologyClass> basis() const;

  /// Coordinates in basis() of the class of a cycle given as generator
  /// indices (repeats cancel). Throws InvalidComplex if it is not a cycle.
  std::vector<bool> class_of(std::span<const std::size_t> chain) const;

 private:
  std::vector<GeneratorInfo> generators_;
  const simd::Kernels* kernels_;
  std::vector<std::size_t> order_;     // position -> input index
  std::vector<std::size_t> position_;  // input index -> position
  BitMatrix reduced_;                  // R = D V
  BitMatrix transform_;                // V
  std::vector<std::ptrdiff_t> pivot_owner_;  // row position -> column with that low
  std::vector<std::size_t> essential_;       // positions of unpaired cycles
  std::vector<std::ptrdiff_t> essential_slot_;
  std::size_t boundary_rank_ = 0;
};

/// Ranks of the associated graded of homology with respect to the grading
/// filtration. For a differential that is homogeneous in the grading this is
/// (#generators in g) - rank(d out of g) - rank(d into g). Zero entries are
/// omitted. Throws InvalidComplex if d^2 != 0 or d raises the grading.
std::map<int, std::size_t> homology_ranks(const GradedF2Complex& c,
                                          const simd::Kernels& k = simd::active());

/// Ranks by maslov grading; requires a maslov-homogeneous complex.
std::map<int, std::size_t> maslov_homology_ranks(const GradedF2Complex& c,
                                                 const simd::Kernels& k = simd::active());

std::size_t total_homology_rank(const GradedF2Complex& c,
                                const simd::Kernels& k = simd::active());

struct ConnectingMap {
  F2Matrix matrix;  // rows: sub_basis, cols: quotient_basis
  std::vector<HomologyClass> quotient_basis;
  std::vector<HomologyClass> sub_basis;

  std::size_t rank() const { return f2::rank(matrix); }
  std::size_t kernel_rank() const { return matrix.cols() - rank(); }
  /// Quotient cycles spanning the kernel, in input labels.
  std::vector<std::vector<std::string>> kernel_witnesses() const;
};

/// The short exact sequence 0 -> sub -> total -> total/sub -> 0 for a set of
/// generators spanning a subcomplex.
class ShortExactSequence {
 public:
  ShortExactSequence(const GradedF2Complex& total, std::span<const std::string> sub_labels,
                     const simd::Kernels& k = simd::active());

  const GradedF2Complex& sub() const noexcept { return sub_; }
  const GradedF2Complex& quotient() const noexcept { return quotient_; }
  const Reduction& sub_reduction() const noexcept { return *sub_red_; }
  const Reduction& quotient_reduction() const noexcept { return *quot_red_; }

  /// [d lift] in H(sub) for a chain of the total complex (input indices)
  /// whose image in the quotient is a cycle.
  std::vector<bool> boundary_class(std::span<const std::size_t> lift) const;

  ConnectingMap connecting_map() const;

  /// Rank of H(sub) -> H(total) induced by inclusion.
  std::size_t inclusion_rank() const;

 private:
  GradedF2Complex total_;
  const simd::Kernels* kernels_;
  std::vector<std::size_t> sub_index_;    // sub position -> total index
  std::vector<std::size_t> quot_index_;   // quotient position -> total index
  std::vector<std::ptrdiff_t> to_sub_;    // total index -> sub position or -1
  GradedF2Complex sub_;
  GradedF2Complex quotient_;
  std::optional<Reduction> sub_red_;
  std::optional<Reduction> quot_red_;
};

/// [z] -> [d z~] from H(total/sub) to H(sub). Throws NotASubcomplex when
/// d(sub) is not contained in sub, InvalidComplex when d^2 != 0.
ConnectingMap connecting_homomorphism(const GradedF2Complex& total,
                                      std::span<const std::string> sub_labels,
                                      const simd::Kernels& k = simd::active());

}  // namespace hfs::f2
