#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hfs/cfk/complex.hpp"
#include "hfs/f2/complex.hpp"

namespace hfs::cfk {

enum class RegionKind {
  Vertical,     // i = 0
  FiltSub,      // i = 0, j <= s
  HFKSlice,     // i = 0, j = s
  HorizRay,     // i < 0, j = s
  HorizClosed,  // i <= 0, j = s
  Hook,         // max(i, j - m) = 0
  HookSub,      // i < 0, j = m
  HookQuot,     // i = 0, j <= m
};

struct RegionSpec {
  RegionKind kind = RegionKind::Vertical;
  int level = 0;

  static RegionSpec vertical() { return {RegionKind::Vertical, 0}; }
  static RegionSpec filt_sub(int s) { return {RegionKind::FiltSub, s}; }
  static RegionSpec hfk_slice(int s) { return {RegionKind::HFKSlice, s}; }
  static RegionSpec horiz_ray(int s) { return {RegionKind::HorizRay, s}; }
  static RegionSpec horiz_closed(int s) { return {RegionKind::HorizClosed, s}; }
  static RegionSpec hook(int m) { return {RegionKind::Hook, m}; }
  static RegionSpec hook_sub(int m) { return {RegionKind::HookSub, m}; }
  static RegionSpec hook_quot(int m) { return {RegionKind::HookQuot, m}; }

  bool hook_family() const {
    return kind == RegionKind::Hook || kind == RegionKind::HookSub ||
           kind == RegionKind::HookQuot;
  }
  std::string describe() const;
};

/// Label of the translate U^{-i} x: plain x on the i = 0 slice, x@i otherwise.
std::string translate_label(const std::string& label, int i);

/// Every region used admits at most one translate (x, i) per generator, so
/// a region is the choice of that i (or none) for each generator.
using TranslateRule = std::function<std::optional<int>(const Generator&)>;

/// Materialise the translates picked by rule with the induced differential
/// (an arrow survives iff both ends are in the region). Grading is the
/// j coordinate A(x) + i unless a grading rule is supplied.
f2::GradedF2Complex extract_translates(
    const BifilteredComplex& c, const TranslateRule& rule,
    const std::function<int(const Generator&, int i)>& grading = {});

/// Subquotient for a region spec. Hook-family regions are graded by the
/// two-step filtration: 0 on the S_m part (i < 0), 1 on the Q_m part (i = 0).
f2::GradedF2Complex extract(const BifilteredComplex& c, const RegionSpec& region);

/// All translates (x, i) with i in [i_min, i_max] whose (i, j) satisfies the
/// predicate; a generator may appear several times. Used by the truncation
/// cross-checks, never by the direct extractions.
f2::GradedF2Complex extract_window(const BifilteredComplex& c, int i_min, int i_max,
                                   const std::function<bool(int i, int j)>& keep);

/// s -> rank H(C{i = 0, j = s}), zero ranks omitted.
std::map<int, std::size_t> hfk_ranks(const BifilteredComplex& c);

/// Largest s with nonzero knot Floer rank. Throws EmptyHomology.
int genus(const BifilteredComplex& c);
bool is_fibered_like(const BifilteredComplex& c);

/// rank H(C{i = 0, j = s}) == rank H(C{j = 0, i = s}) for every s.
bool check_flip_symmetry(const BifilteredComplex& c);

}  // namespace hfs::cfk
