#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hfs::farey {

/// Reduced slope p/q with q >= 0; 1/0 is the only slope with q = 0.
class Slope {
 public:
  /// Reduces and normalises the sign. Throws Indeterminate for 0/0.
  static Slope make(std::int64_t p, std::int64_t q);
  static Slope integer(std::int64_t n) { return make(n, 1); }
  static Slope infinity() { return make(1, 0); }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }

  std::string str() const;  // "p/q"

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Accepts "p/q" or an integer "n". Throws ParseError.
Slope parse_slope(std::string_view text);

Slope mediant(const Slope& s, const Slope& t);

/// |p_s q_t - p_t q_s| = 1
bool is_neighbor(const Slope& s, const Slope& t);

/// Back slopes from n/1 to the target and the slope of the leaf each
/// Legendrian surgery is performed on.
struct FareyPath {
  std::vector<Slope> back_slopes;
  std::vector<Slope> surgeries;

  /// Neighbour, mediant-recurrence and monotonicity invariants.
  bool well_formed() const;
};

/// Stern-Brocot descent from the bracket (n/1, 1/0) to target > n.
/// Throws SlopeNotAbove.
FareyPath surgery_path(std::int64_t n, const Slope& target);

/// r = q / (qn - p): p/q-surgery is n-surgery followed by r-surgery on the
/// meridian. Throws Indeterminate when qn = p.
Slope slam_dunk(const Slope& target, std::int64_t n);

}  // namespace hfs::farey
