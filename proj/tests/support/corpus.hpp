#pragma once

// Fixtures shared by the unit suites and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hfs/cfk/complex.hpp"
#include "hfs/f2/complex.hpp"

namespace fixtures {

struct Named {
  std::string name;
  hfs::cfk::BifilteredComplex complex;
};

/// Acyclic 1x1 box x -> y, x -> U z, y -> U w, z -> w centred at Alexander a.
void add_box(std::vector<hfs::cfk::Generator>& gens, std::vector<hfs::cfk::Arrow>& arrows,
             const std::string& tag, int a, int maslov);

/// staircase(2, Right) plus a pair x -> U y that cancels a Q-class against
/// an S-class inside X_0. Its rank-equality certificate fails.
hfs::cfk::BifilteredComplex lspace_breaker();

/// Staircases k = 1..max_k of both hands, staircases carrying boxes below
/// the top grading, and the certificate-breaking fixture.
std::vector<Named> corpus(int max_k = 6);

/// Staircase-plus-boxes sums with random placement, for property tests.
hfs::cfk::BifilteredComplex random_cfk(std::mt19937_64& rng);

/// D = P D0 P^-1 with D0 a sum of cancelling pairs and P invertible and
/// block diagonal in maslov grading, so d^2 = 0 and d drops maslov by 1.
/// Every generator has grading 0.
hfs::f2::GradedF2Complex random_f2(std::mt19937_64& rng, std::size_t max_gens);

/// Labels of a random subcomplex of c (a random set closed under d).
std::vector<std::string> random_subcomplex(const hfs::f2::GradedF2Complex& c, std::mt19937_64& rng);

}  // namespace fixtures
