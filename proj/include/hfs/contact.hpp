#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfs/cfk/complex.hpp"
#include "hfs/f2/complex.hpp"
#include "hfs/farey.hpp"
#include "hfs/surgery.hpp"

// (Non)vanishing of contact invariants from knot Floer data. The input
// complex is taken as the ambient complex of the contact class; any
// orientation reversal is the caller's job when preparing the file.
namespace hfs::contact {

enum class Status { Nonvanishing, Vanishing, Unknown };

std::string_view to_string(Status s);

struct Certificate {
  std::optional<std::size_t> kernel_rank;
  std::vector<std::vector<std::string>> witnesses;  // kernel cycles, input labels
  std::optional<farey::FareyPath> path;
  std::optional<surgery::Gate> gate;
  std::string reason;
};

struct Verdict {
  Status status = Status::Unknown;
  Certificate certificate;
};

/// Connecting map of 0 -> F(top-1) -> CF-hat -> HFK(top) -> 0.
struct DeltaStar {
  f2::ConnectingMap map;
  std::size_t kernel_rank = 0;
  int genus = 0;
};

/// Throws NotFibered when the top group is not rank 1.
DeltaStar delta_star(const cfk::BifilteredComplex& c,
                     const f2::simd::Kernels& k = f2::simd::active());

/// ker delta_* != 0.
bool contact_invariant_nonzero(const cfk::BifilteredComplex& c,
                               const f2::simd::Kernels& k = f2::simd::active());

/// Kernel of H(C{i=0, j=-g}) -> H(C{i<0, j=-g}), the connecting map of the
/// horizontal slice at j = -g. Only the n >= 2g gate reads n.
Verdict core_contact_nonzero(const cfk::BifilteredComplex& c, int n,
                             const f2::simd::Kernels& k = f2::simd::active());

/// Verdict for the rational open book induced by p/q surgery:
/// below 2g -> Unknown; integral -> iff via core_contact_nonzero;
/// non-integral -> Nonvanishing with a Legendrian surgery plan when the
/// original invariant is nonzero, Unknown otherwise.
Verdict slope_verdict(const cfk::BifilteredComplex& c, std::int64_t p, std::int64_t q,
                      const f2::simd::Kernels& k = f2::simd::active());

}  // namespace hfs::contact
