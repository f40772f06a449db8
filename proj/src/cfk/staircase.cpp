#include "hfs/cfk/staircase.hpp"

#include "hfs/error.hpp"

namespace hfs::cfk {

std::string staircase_label(int a) {
  return a < 0 ? "gm" + std::to_string(-a) : "g" + std::to_string(a);
}

BifilteredComplex staircase(int k, Hand hand) {
  if (k < 1) throw Error(ErrorKind::ValidationError, "staircase needs k >= 1");
  std::vector<Generator> gens;
  for (int a = k; a >= -k; --a) {
    const int parity = (k - a) % 2;
    gens.push_back({staircase_label(a), a, hand == Hand::Right ? parity : -parity});
  }
  std::vector<Arrow> arrows;
  const int top = hand == Hand::Right ? k - 1 : k;
  const int bottom = -top;
  for (int a = top; a >= bottom; a -= 2) {
    if (a > -k) arrows.push_back({staircase_label(a), staircase_label(a - 1), 0});
    if (a < k) arrows.push_back({staircase_label(a), staircase_label(a + 1), 1});
  }
  return BifilteredComplex(std::move(gens), std::move(arrows));
}

}  // namespace hfs::cfk
