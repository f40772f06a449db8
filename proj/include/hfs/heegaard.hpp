#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

// Alexander-grading arithmetic on relative periodic domains, plus the
// number theory behind winding regions and cables.
//
// A model only records region multiplicities and which four regions meet
// at each coordinate of a generator. Whether it really is a periodic
// domain in the class of a Seifert surface is not checkable here.
namespace hfs::heegaard {

using Rational = boost::rational<long long>;

struct Region {
  std::string id;
  long long multiplicity = 0;

  friend bool operator==(const Region&, const Region&) = default;
};

using Corner = std::array<std::string, 4>;

struct DomainGenerator {
  std::string label;
  std::vector<Corner> corners;  // one 4-tuple per coordinate

  friend bool operator==(const DomainGenerator&, const DomainGenerator&) = default;
};

class PeriodicDomainModel {
 public:
  /// Throws ValidationError on unknown or duplicate ids and on a
  /// coordinate count that varies between generators.
  PeriodicDomainModel(std::vector<Region> regions, std::vector<DomainGenerator> generators);

  const std::vector<Region>& regions() const noexcept { return regions_; }
  const std::vector<DomainGenerator>& generators() const noexcept { return generators_; }

  long long multiplicity(const std::string& region) const;
  const DomainGenerator& generator(const std::string& label) const;  // UnknownGenerator

  friend bool operator==(const PeriodicDomainModel&, const PeriodicDomainModel&) = default;

 private:
  std::vector<Region> regions_;
  std::vector<DomainGenerator> generators_;
};

/// `domain v1` text. Throws ParseError.
PeriodicDomainModel parse_domain(std::string_view text);
PeriodicDomainModel load_domain(const std::string& path);

/// n_x(P): sum over coordinates of the mean of the four corner multiplicities.
Rational point_measure(const PeriodicDomainModel& d, const std::string& x);

/// A(x) - A(y) = n_x(P) - n_y(P). Not forced to be an integer.
Rational alexander_difference(const PeriodicDomainModel& d, const std::string& x,
                              const std::string& y);

struct WindingResult {
  bool distinct = true;
  std::optional<std::pair<long long, long long>> witness;  // (r_lambda, r_mu)
};

/// Searches 0 < r_lambda < a, 0 < r_mu < q for r_lambda q = r_mu a.
/// Throws ValidationError unless a, q >= 1.
WindingResult winding_distinct(long long a, long long q);

struct WindingParams {
  long long a = 1;
  long long q = 1;
  std::optional<long long> p;
  std::optional<long long> b;

  /// Positivity, and pa - qb = -1 when both p and b are given.
  bool valid() const;
};

struct CableArithmetic {
  long long order = 1;   // p' = p / gcd(P, p)
  long long copies = 1;  // R = P / gcd(P, p)
};

CableArithmetic cable_arithmetic(long long p, long long P);

/// Every region multiplicity times R. Throws ValidationError unless R >= 1.
PeriodicDomainModel scaled_measure(const PeriodicDomainModel& d, long long R);

std::string to_string(const Rational& r);  // "p/q"

}  // namespace hfs::heegaard
