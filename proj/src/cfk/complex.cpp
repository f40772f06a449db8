#include "hfs/cfk/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hfs/error.hpp"

namespace hfs::cfk {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::ValidationError, what);
}

}  // namespace

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  });
}

BifilteredComplex::BifilteredComplex(std::vector<Generator> generators, std::vector<Arrow> arrows)
    : generators_(std::move(generators)), arrows_(std::move(arrows)) {
  std::size_t with_maslov = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!is_identifier(g.label)) invalid("bad generator label '" + g.label + "'");
    if (!index_.emplace(g.label, i).second) invalid("duplicate generator '" + g.label + "'");
    if (g.maslov) ++with_maslov;
  }
  if (with_maslov != 0 && with_maslov != generators_.size()) {
    invalid("maslov gradings must be given on all generators or none");
  }

  out_.resize(generators_.size());
  std::set<std::tuple<std::size_t, std::size_t, int>> seen;
  for (const auto& a : arrows_) {
    const auto s = index_of(a.src);
    const auto d = index_of(a.dst);
    if (!s) invalid("arrow from unknown generator '" + a.src + "'");
    if (!d) invalid("arrow to unknown generator '" + a.dst + "'");
    if (a.h < 0) invalid("arrow " + a.src + " -> " + a.dst + " has negative h");
    if (!seen.emplace(*s, *d, a.h).second) {
      invalid("duplicate arrow " + a.src + " -> " + a.dst + " h=" + std::to_string(a.h));
    }
    const Edge e{*s, *d, a.h};
    if (vertical_drop(e) < 0) {
      invalid("arrow " + a.src + " -> " + a.dst + " h=" + std::to_string(a.h) +
              " raises the j filtration (vertical drop " + std::to_string(vertical_drop(e)) +
              ")");
    }
    if (with_maslov != 0 && *generators_[*d].maslov != *generators_[*s].maslov - 1) {
      invalid("arrow " + a.src + " -> " + a.dst + " does not drop maslov by 1");
    }
    out_[*s].push_back(edges_.size());
    edges_.push_back(e);
  }

  // d^2 = 0 over F[U]: paths x -> y -> z of total U-power H cancel in pairs.
  for (std::size_t x = 0; x < generators_.size(); ++x) {
    std::map<std::pair<std::size_t, int>, int> paths;
    for (std::size_t e1 : out_[x]) {
      const Edge& first = edges_[e1];
      for (std::size_t e2 : out_[first.dst]) {
        const Edge& second = edges_[e2];
        ++paths[{second.dst, first.h + second.h}];
      }
    }
    for (const auto& [key, count] : paths) {
      if (count % 2 != 0) {
        invalid("d^2 != 0: " + generators_[x].label + " -> " + generators_[key.first].label +
                " with U^" + std::to_string(key.second) + " (" + std::to_string(count) +
                " paths)");
      }
    }
  }
}

std::optional<std::size_t> BifilteredComplex::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BifilteredComplex::has_maslov() const noexcept {
  return !generators_.empty() && generators_.front().maslov.has_value();
}

}  // namespace hfs::cfk
