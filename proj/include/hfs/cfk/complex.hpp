#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hfs::cfk {

struct Generator {
  std::string label;
  int alexander = 0;
  std::optional<int> maslov;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A term U^h * dst in the differential of src. In (i, j) coordinates the
/// translate (src, i) maps to (dst, i - h); the j-drop is
/// A(src) - A(dst) + h and must be nonnegative.
struct Arrow {
  std::string src;
  std::string dst;
  int h = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite presentation of CFK^infinity: generators on the i = 0 slice,
/// U-decorated arrows, coefficients 0 or 1. Instances are always valid.
class BifilteredComplex {
 public:
  struct Edge {
    std::size_t src;
    std::size_t dst;
    int h;
  };

  /// Throws ValidationError naming the violated invariant and a witness.
  BifilteredComplex(std::vector<Generator> generators, std::vector<Arrow> arrows);

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t gen) const { return out_.at(gen); }

  std::size_t size() const noexcept { return generators_.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  bool has_maslov() const noexcept;

  int vertical_drop(const Edge& e) const {
    return generators_[e.src].alexander - generators_[e.dst].alexander + e.h;
  }

  friend bool operator==(const BifilteredComplex& a, const BifilteredComplex& b) {
    return a.generators_ == b.generators_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<Arrow> arrows_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;  // generator -> edge indices
  std::unordered_map<std::string, std::size_t> index_;
};

/// Parses the line-oriented `cfk v1` format. Rejects rather than repairs:
/// ParseError for malformed text, ValidationError for invariant failures.
BifilteredComplex parse_cfk(std::string_view text);
BifilteredComplex load_cfk(const std::string& path);

/// Canonical `cfk v1` text; parse_cfk(to_cfk(c)) == c.
std::string to_cfk(const BifilteredComplex& c);

bool is_identifier(std::string_view s);

}  // namespace hfs::cfk
