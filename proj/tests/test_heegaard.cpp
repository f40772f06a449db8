#include <doctest.h>

#include <numeric>
#include <random>

#include "hfs/error.hpp"
#include "hfs/heegaard.hpp"

using namespace hfs::heegaard;

namespace {

const char* kModel =
    "domain v1\n"
    "# two coordinates per generator\n"
    "region z mult=0\n"
    "region o mult=1\n"
    "region t mult=2\n"
    "generator x corners=o,o,o,o;z,o,o,t\n"
    "generator y corners=z,z,z,z;z,z,o,o\n"
    "generator w corners=z,z,z,z;z,z,z,z\n";

template <class F>
hfs::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const hfs::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return hfs::ErrorKind::ValidationError;
}

}  // namespace

TEST_CASE("point measure") {
  const auto d = parse_domain(kModel);
  CHECK(point_measure(d, "w") == Rational(0));
  CHECK(point_measure(d, "y") == Rational(1, 2));
  CHECK(point_measure(d, "x") == Rational(2));
  const auto one = parse_domain("domain v1\nregion z mult=0\nregion o mult=1\ngenerator a corners=z,z,o,o\n");
  CHECK(point_measure(one, "a") == Rational(1, 2));
  CHECK(kind_of([&] { point_measure(d, "nope"); }) == hfs::ErrorKind::UnknownGenerator);
}

TEST_CASE("alexander differences") {
  const auto d = parse_domain(kModel);
  CHECK(alexander_difference(d, "x", "x") == Rational(0));
  CHECK(alexander_difference(d, "x", "w") == Rational(2));
  CHECK(alexander_difference(d, "w", "x") == Rational(-2));
  CHECK(alexander_difference(d, "x", "y") + alexander_difference(d, "y", "w") == alexander_difference(d, "x", "w"));
  CHECK(to_string(alexander_difference(d, "y", "w")) == "1/2");
  CHECK(to_string(alexander_difference(d, "w", "y")) == "-1/2");
  const auto unit = parse_domain("domain v1\nregion a mult=1\nregion b mult=0\ngenerator x corners=a,a,a,a\n"
                                 "generator y corners=b,b,b,b\n");
  CHECK(alexander_difference(unit, "x", "y") == Rational(1));
  CHECK(kind_of([&] { alexander_difference(d, "x", "q"); }) == hfs::ErrorKind::UnknownGenerator);
}

TEST_CASE("scaling") {
  const auto d = parse_domain(kModel);
  CHECK(scaled_measure(d, 1) == d);
  const auto one = parse_domain("domain v1\nregion z mult=0\nregion o mult=1\ngenerator a corners=z,z,o,o\n");
  CHECK(point_measure(scaled_measure(one, 3), "a") == Rational(3, 2));
  for (long long r1 = 1; r1 <= 5; ++r1) {
    for (long long r2 = 1; r2 <= 5; ++r2) {
      CHECK(scaled_measure(d, r1 * r2) == scaled_measure(scaled_measure(d, r1), r2));
    }
    for (const char* x : {"x", "y", "w"}) {
      CHECK(point_measure(scaled_measure(d, r1), x) == point_measure(d, x) * Rational(r1));
      CHECK(alexander_difference(scaled_measure(d, r1), x, "y") == alexander_difference(d, x, "y") * Rational(r1));
    }
  }
  CHECK(kind_of([&] { scaled_measure(d, 0); }) == hfs::ErrorKind::ValidationError);
}

TEST_CASE("measure is linear in multiplicities") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long long> mult(-20, 20);
  std::uniform_int_distribution<int> reg(0, 4);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Region> a, b, sum;
    for (int i = 0; i < 5; ++i) {
      const auto x = mult(rng), y = mult(rng);
      const std::string id = "r" + std::to_string(i);
      a.push_back({id, x});
      b.push_back({id, y});
      sum.push_back({id, x + y});
    }
    DomainGenerator g{"g", {}};
    for (int c = 0; c < 3; ++c) {
      Corner corner;
      for (auto& id : corner) id = "r" + std::to_string(reg(rng));
      g.corners.push_back(corner);
    }
    const PeriodicDomainModel da(a, {g}), db(b, {g}), ds(sum, {g});
    CHECK(point_measure(ds, "g") == point_measure(da, "g") + point_measure(db, "g"));
  }
}

TEST_CASE("model validation and parsing") {
  CHECK(kind_of([] { parse_domain("domain v1\nregion a mult=1\ngenerator x corners=a,a,a,b\n"); }) ==
        hfs::ErrorKind::ValidationError);
  CHECK(kind_of([] {
          parse_domain("domain v1\nregion a mult=1\ngenerator x corners=a,a,a,a\ngenerator y corners=a,a,a,a;a,a,a,a\n");
        }) == hfs::ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_domain("domain v2\n"); }) == hfs::ErrorKind::ParseError);
  CHECK(kind_of([] { parse_domain("domain v1\nregion a mult=x\n"); }) == hfs::ErrorKind::ParseError);
  CHECK(kind_of([] { parse_domain("domain v1\nregion a mult=1\ngenerator x corners=a,a,a\n"); }) ==
        hfs::ErrorKind::ParseError);
  CHECK(kind_of([] { parse_domain("domain v1\nregion a mult=1\nregion a mult=2\n"); }) == hfs::ErrorKind::ParseError);
  CHECK(kind_of([] { parse_domain("domain v1\nface a\n"); }) == hfs::ErrorKind::ParseError);
  CHECK_THROWS_AS(load_domain("/nonexistent/model.dom"), hfs::ParseError);
}

TEST_CASE("winding distinctness") {
  CHECK(winding_distinct(3, 5).distinct);
  const auto w = winding_distinct(4, 6);
  CHECK_FALSE(w.distinct);
  REQUIRE(w.witness.has_value());
  CHECK(*w.witness == std::make_pair(2LL, 3LL));
  CHECK(winding_distinct(1, 7).distinct);
  CHECK(kind_of([] { winding_distinct(0, 3); }) == hfs::ErrorKind::ValidationError);
  for (long long a = 1; a <= 200; ++a) {
    for (long long q = 1; q <= 200; ++q) {
      const auto r = winding_distinct(a, q);
      REQUIRE(r.distinct == (std::gcd(a, q) == 1));
      if (!r.distinct) {
        const auto [rl, rm] = *r.witness;
        REQUIRE((rl > 0 && rl < a && rm > 0 && rm < q && rl * q == rm * a));
      }
    }
  }
}

TEST_CASE("winding parameters") {
  CHECK(WindingParams{3, 5, 3, 2}.valid());  // 3*3 - 5*2 = -1
  CHECK_FALSE(WindingParams{3, 5, 1, 1}.valid());
  CHECK(WindingParams{3, 5, std::nullopt, std::nullopt}.valid());
  CHECK_FALSE(WindingParams{0, 5, std::nullopt, std::nullopt}.valid());
}

TEST_CASE("cable arithmetic") {
  CHECK(cable_arithmetic(1, 3).order == 1);
  CHECK(cable_arithmetic(1, 3).copies == 3);
  CHECK(cable_arithmetic(6, 4).order == 3);
  CHECK(cable_arithmetic(6, 4).copies == 2);
  CHECK(cable_arithmetic(5, 5).order == 1);
  CHECK(cable_arithmetic(5, 5).copies == 1);
  CHECK(kind_of([] { cable_arithmetic(0, 5); }) == hfs::ErrorKind::ValidationError);
}
