#pragma once

#include <string>

#include "hfs/cfk/complex.hpp"

namespace hfs::cfk {

enum class Hand { Right, Left };

/// Staircase complex of the (2, 2k+1) torus knot (Right) or its mirror
/// (Left). Generators g_k ... g_-k carry alexander a; negative indices are
/// spelled gm1, gm2, ... Right: d g_a = g_{a-1} + U g_{a+1} for
/// a = k-1, k-3, ..., -(k-1). Left: d g_a = g_{a-1} + U g_{a+1} (dropping
/// terms past the ends) for a = k, k-2, ..., -k. The top generator has
/// maslov 0 and every arrow drops maslov by 1.
BifilteredComplex staircase(int k, Hand hand);

std::string staircase_label(int a);

}  // namespace hfs::cfk
