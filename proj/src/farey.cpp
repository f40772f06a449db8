#include "hfs/farey.hpp"

#include <charconv>
#include <numeric>

#include "hfs/error.hpp"

namespace hfs::farey {

namespace {

__extension__ typedef __int128 wide;

std::int64_t checked(wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorKind::ValidationError, "slope arithmetic overflows 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_i64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(1, "bad slope '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorKind::Indeterminate, "slope 0/0");
  if (q == 0) return Slope(1, 0);
  if (q < 0) {
    p = checked(-static_cast<wide>(p));
    q = checked(-static_cast<wide>(q));
  }
  const std::int64_t g = std::gcd(p, q);
  return Slope(p / g, q / g);
}

std::string Slope::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  // Denominators are nonnegative, so cross-multiplication preserves order;
  // 1/0 compares above every finite slope.
  return static_cast<wide>(a.p_) * b.q_ <=> static_cast<wide>(b.p_) * a.q_;
}

Slope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope::make(parse_i64(text, text), 1);
  return Slope::make(parse_i64(text.substr(0, slash), text),
                     parse_i64(text.substr(slash + 1), text));
}

Slope mediant(const Slope& s, const Slope& t) {
  return Slope::make(checked(static_cast<wide>(s.p()) + t.p()),
                     checked(static_cast<wide>(s.q()) + t.q()));
}

bool is_neighbor(const Slope& s, const Slope& t) {
  const wide det = static_cast<wide>(s.p()) * t.q() - static_cast<wide>(t.p()) * s.q();
  return det == 1 || det == -1;
}

bool FareyPath::well_formed() const {
  if (back_slopes.size() != surgeries.size() + 1) return false;
  for (std::size_t k = 0; k < surgeries.size(); ++k) {
    const Slope& here = back_slopes[k];
    const Slope& next = back_slopes[k + 1];
    if (!is_neighbor(here, next) || !(here < next)) return false;
    if (!is_neighbor(here, surgeries[k]) || !(surgeries[k] > here)) return false;
    if (mediant(here, surgeries[k]) != next) return false;
  }
  return true;
}

FareyPath surgery_path(std::int64_t n, const Slope& target) {
  const Slope start = Slope::integer(n);
  if (target.is_infinite() || !(target > start)) {
    throw Error(ErrorKind::SlopeNotAbove,
                "target " + target.str() + " must be a finite slope above " + start.str());
  }
  FareyPath path;
  path.back_slopes.push_back(start);
  Slope lo = start;
  Slope hi = Slope::infinity();
  while (lo != target) {
    const Slope c = mediant(lo, hi);
    if (c <= target) {
      path.surgeries.push_back(hi);
      path.back_slopes.push_back(c);
      lo = c;
    } else {
      hi = c;
    }
  }
  return path;
}

Slope slam_dunk(const Slope& target, std::int64_t n) {
  if (target.is_infinite()) throw Error(ErrorKind::Indeterminate, "slam dunk of 1/0");
  const wide denom = static_cast<wide>(target.q()) * n - target.p();
  if (denom == 0) {
    throw Error(ErrorKind::Indeterminate, "qn = p for " + target.str() + " and n=" + std::to_string(n));
  }
  return Slope::make(target.q(), checked(denom));
}

}  // namespace hfs::farey
