#include "brute.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace brute {

std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c] != 0) {
        for (std::size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::size_t homology_rank(const Dense& boundary) {
  return boundary.size() - 2 * rank(boundary);
}

Dense region_boundary(const hfs::cfk::BifilteredComplex& c,
                      const std::function<bool(int i, int j)>& keep) {
  const auto& gens = c.generators();
  int span = 4;
  for (const auto& g : gens) span += std::abs(g.alexander);
  for (const auto& a : c.arrows()) span += a.h;

  std::map<std::pair<std::string, int>, std::size_t> pos;
  for (const auto& g : gens) {
    for (int i = -2 * span; i <= 2 * span; ++i) {
      if (keep(i, g.alexander + i)) pos.emplace(std::make_pair(g.label, i), pos.size());
    }
  }
  Dense d(pos.size(), std::vector<std::uint8_t>(pos.size(), 0));
  for (const auto& [key, col] : pos) {
    for (const auto& a : c.arrows()) {
      if (a.src != key.first) continue;
      auto it = pos.find({a.dst, key.second - a.h});
      if (it != pos.end()) d[it->second][col] ^= 1;
    }
  }
  return d;
}

std::size_t region_rank(const hfs::cfk::BifilteredComplex& c,
                        const std::function<bool(int i, int j)>& keep) {
  return homology_rank(region_boundary(c, keep));
}

std::size_t hook_rank(const hfs::cfk::BifilteredComplex& c, int m) {
  return region_rank(c, [m](int i, int j) { return std::max(i, j - m) == 0; });
}

std::size_t sub_rank(const hfs::cfk::BifilteredComplex& c, int m) {
  return region_rank(c, [m](int i, int j) { return i < 0 && j == m; });
}

std::size_t quot_rank(const hfs::cfk::BifilteredComplex& c, int m) {
  return region_rank(c, [m](int i, int j) { return i == 0 && j <= m; });
}

std::map<int, std::size_t> hfk(const hfs::cfk::BifilteredComplex& c) {
  std::map<int, std::size_t> out;
  for (const auto& g : c.generators()) {
    const int s = g.alexander;
    if (out.count(s)) continue;
    const auto r = region_rank(c, [s](int i, int j) { return i == 0 && j == s; });
    out[s] = r;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool valid(const std::vector<hfs::cfk::Generator>& gens,
           const std::vector<hfs::cfk::Arrow>& arrows) {
  std::map<std::string, const hfs::cfk::Generator*> by;
  for (const auto& g : gens) by[g.label] = &g;
  const bool maslov = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.maslov.has_value(); });
  for (const auto& a : arrows) {
    if (!by.count(a.src) || !by.count(a.dst) || a.h < 0) return false;
    if (by[a.src]->alexander - by[a.dst]->alexander + a.h < 0) return false;
    if (maslov && *by[a.dst]->maslov != *by[a.src]->maslov - 1) return false;
  }
  std::map<std::tuple<std::string, std::string, int>, int> paths;
  for (const auto& a : arrows) {
    for (const auto& b : arrows) {
      if (a.dst == b.src) ++paths[{a.src, b.dst, a.h + b.h}];
    }
  }
  return std::all_of(paths.begin(), paths.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

}  // namespace brute
