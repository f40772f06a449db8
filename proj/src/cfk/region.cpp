#include "hfs/cfk/region.hpp"

#include <algorithm>
#include <set>

#include "hfs/error.hpp"

namespace hfs::cfk {

std::string RegionSpec::describe() const {
  const std::string s = std::to_string(level);
  switch (kind) {
    case RegionKind::Vertical: return "C{i=0}";
    case RegionKind::FiltSub: return "C{i=0,j<=" + s + "}";
    case RegionKind::HFKSlice: return "C{i=0,j=" + s + "}";
    case RegionKind::HorizRay: return "C{i<0,j=" + s + "}";
    case RegionKind::HorizClosed: return "C{i<=0,j=" + s + "}";
    case RegionKind::Hook: return "C{max(i,j-" + s + ")=0}";
    case RegionKind::HookSub: return "S_" + s;
    case RegionKind::HookQuot: return "Q_" + s;
  }
  return "?";
}

std::string translate_label(const std::string& label, int i) {
  return i == 0 ? label : label + "@" + std::to_string(i);
}

f2::GradedF2Complex extract_translates(const BifilteredComplex& c, const TranslateRule& rule,
                                       const std::function<int(const Generator&, int)>& grading) {
  const auto& gens = c.generators();
  std::vector<std::optional<int>> chosen(gens.size());
  std::vector<std::ptrdiff_t> slot(gens.size(), -1);
  std::vector<f2::GeneratorInfo> infos;
  for (std::size_t x = 0; x < gens.size(); ++x) {
    chosen[x] = rule(gens[x]);
    if (!chosen[x]) continue;
    const int i = *chosen[x];
    slot[x] = static_cast<std::ptrdiff_t>(infos.size());
    infos.push_back({translate_label(gens[x].label, i),
                     grading ? grading(gens[x], i) : gens[x].alexander + i, gens[x].maslov});
  }
  f2::F2Matrix d(infos.size(), infos.size());
  for (const auto& e : c.edges()) {
    if (!chosen[e.src] || !chosen[e.dst]) continue;
    if (*chosen[e.dst] != *chosen[e.src] - e.h) continue;
    d.flip(static_cast<std::size_t>(slot[e.dst]), static_cast<std::size_t>(slot[e.src]));
  }
  return f2::GradedF2Complex(std::move(infos), std::move(d));
}

f2::GradedF2Complex extract(const BifilteredComplex& c, const RegionSpec& region) {
  const int s = region.level;
  TranslateRule rule;
  switch (region.kind) {
    case RegionKind::Vertical:
      rule = [](const Generator&) -> std::optional<int> { return 0; };
      break;
    case RegionKind::FiltSub:
    case RegionKind::HookQuot:
      rule = [s](const Generator& g) -> std::optional<int> {
        if (g.alexander <= s) return 0;
        return std::nullopt;
      };
      break;
    case RegionKind::HFKSlice:
      rule = [s](const Generator& g) -> std::optional<int> {
        if (g.alexander == s) return 0;
        return std::nullopt;
      };
      break;
    case RegionKind::HorizRay:
    case RegionKind::HookSub:
      rule = [s](const Generator& g) -> std::optional<int> {
        if (s - g.alexander < 0) return s - g.alexander;
        return std::nullopt;
      };
      break;
    case RegionKind::HorizClosed:
      rule = [s](const Generator& g) -> std::optional<int> {
        if (s - g.alexander <= 0) return s - g.alexander;
        return std::nullopt;
      };
      break;
    case RegionKind::Hook:
      rule = [s](const Generator& g) -> std::optional<int> {
        return g.alexander <= s ? 0 : s - g.alexander;
      };
      break;
  }
  if (region.hook_family()) {
    return extract_translates(c, rule, [](const Generator&, int i) { return i < 0 ? 0 : 1; });
  }
  return extract_translates(c, rule);
}

f2::GradedF2Complex extract_window(const BifilteredComplex& c, int i_min, int i_max,
                                   const std::function<bool(int, int)>& keep) {
  const auto& gens = c.generators();
  // (generator, i) -> slot
  std::map<std::pair<std::size_t, int>, std::size_t> slot;
  std::vector<f2::GeneratorInfo> infos;
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (int i = i_max; i >= i_min; --i) {
      const int j = gens[x].alexander + i;
      if (!keep(i, j)) continue;
      slot.emplace(std::make_pair(x, i), infos.size());
      infos.push_back({translate_label(gens[x].label, i), j, gens[x].maslov});
    }
  }
  f2::F2Matrix d(infos.size(), infos.size());
  for (const auto& [key, col] : slot) {
    const auto [x, i] = key;
    for (std::size_t e : c.out_edges(x)) {
      const auto& edge = c.edges()[e];
      auto it = slot.find({edge.dst, i - edge.h});
      if (it != slot.end()) d.flip(it->second, col);
    }
  }
  return f2::GradedF2Complex(std::move(infos), std::move(d));
}

std::map<int, std::size_t> hfk_ranks(const BifilteredComplex& c) {
  std::set<int> levels;
  for (const auto& g : c.generators()) levels.insert(g.alexander);
  std::map<int, std::size_t> out;
  for (int s : levels) {
    const std::size_t r = f2::total_homology_rank(extract(c, RegionSpec::hfk_slice(s)));
    if (r != 0) out[s] = r;
  }
  return out;
}

int genus(const BifilteredComplex& c) {
  const auto ranks = hfk_ranks(c);
  if (ranks.empty()) throw Error(ErrorKind::EmptyHomology, "every Alexander slice is acyclic");
  return ranks.rbegin()->first;
}

bool is_fibered_like(const BifilteredComplex& c) {
  const auto ranks = hfk_ranks(c);
  if (ranks.empty()) throw Error(ErrorKind::EmptyHomology, "every Alexander slice is acyclic");
  return ranks.rbegin()->second == 1;
}

bool check_flip_symmetry(const BifilteredComplex& c) {
  std::set<int> levels;
  for (const auto& g : c.generators()) {
    levels.insert(g.alexander);
    levels.insert(-g.alexander);
  }
  for (int s : levels) {
    const auto vertical = extract(c, RegionSpec::hfk_slice(s));
    // {j = 0, i = s}: the translate (x, s) sits at j = A(x) + s.
    const auto horizontal = extract_translates(c, [s](const Generator& g) -> std::optional<int> {
      if (g.alexander + s == 0) return s;
      return std::nullopt;
    });
    if (f2::total_homology_rank(vertical) != f2::total_homology_rank(horizontal)) return false;
  }
  return true;
}

}  // namespace hfs::cfk
