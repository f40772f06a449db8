#include "hfs/contact.hpp"

#include <numeric>

#include "hfs/cfk/region.hpp"
#include "hfs/error.hpp"

namespace hfs::contact {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Nonvanishing: return "NONVANISHING";
    case Status::Vanishing: return "VANISHING";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

int fibered_genus(const cfk::BifilteredComplex& c) {
  if (!cfk::is_fibered_like(c)) {
    throw Error(ErrorKind::NotFibered, "top knot Floer group does not have rank 1");
  }
  return cfk::genus(c);
}

std::vector<std::string> labels(const f2::GradedF2Complex& c) {
  std::vector<std::string> out;
  for (const auto& g : c.generators()) out.push_back(g.label);
  return out;
}

}  // namespace

DeltaStar delta_star(const cfk::BifilteredComplex& c, const f2::simd::Kernels& k) {
  DeltaStar out;
  out.genus = fibered_genus(c);
  const auto total = cfk::extract(c, cfk::RegionSpec::vertical());
  const auto sub = labels(cfk::extract(c, cfk::RegionSpec::filt_sub(out.genus - 1)));
  out.map = f2::connecting_homomorphism(total, sub, k);
  out.kernel_rank = out.map.kernel_rank();
  return out;
}

bool contact_invariant_nonzero(const cfk::BifilteredComplex& c, const f2::simd::Kernels& k) {
  return delta_star(c, k).kernel_rank > 0;
}

Verdict core_contact_nonzero(const cfk::BifilteredComplex& c, int n, const f2::simd::Kernels& k) {
  const auto gate = surgery::require_large_surgery(c, n);
  const int g = fibered_genus(c);
  const auto total = cfk::extract(c, cfk::RegionSpec::horiz_closed(-g));
  const auto sub = labels(cfk::extract(c, cfk::RegionSpec::horiz_ray(-g)));
  const auto map = f2::connecting_homomorphism(total, sub, k);

  Verdict v;
  v.certificate.gate = gate;
  v.certificate.kernel_rank = map.kernel_rank();
  v.certificate.witnesses = map.kernel_witnesses();
  if (map.kernel_rank() > 0) {
    v.status = Status::Nonvanishing;
    v.certificate.reason = "H(C{i=0,j=-g}) -> H(C{i<0,j=-g}) has nontrivial kernel";
  } else {
    v.status = Status::Vanishing;
    v.certificate.reason = "H(C{i=0,j=-g}) -> H(C{i<0,j=-g}) is injective";
  }
  return v;
}

Verdict slope_verdict(const cfk::BifilteredComplex& c, std::int64_t p, std::int64_t q,
                      const f2::simd::Kernels& k) {
  if (p <= 0 || q <= 0) {
    throw Error(ErrorKind::NonPositiveSlope,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not positive");
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::NonCoprime,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
  const int g = fibered_genus(c);
  Verdict v;
  if (farey::Slope::make(p, q) < farey::Slope::integer(2 * static_cast<std::int64_t>(g))) {
    v.status = Status::Unknown;
    v.certificate.reason = "below proven range: p/q < 2g = " + std::to_string(2 * g);
    return v;
  }
  if (q == 1) {
    if (p > INT32_MAX) throw Error(ErrorKind::ValidationError, "integral slope too large");
    return core_contact_nonzero(c, static_cast<int>(p), k);
  }
  const std::int64_t n = p / q;
  const auto delta = delta_star(c, k);
  v.certificate.kernel_rank = delta.kernel_rank;
  v.certificate.witnesses = delta.map.kernel_witnesses();
  v.certificate.gate = surgery::Gate{g, static_cast<int>(n), true};
  if (delta.kernel_rank > 0) {
    v.status = Status::Nonvanishing;
    v.certificate.path = farey::surgery_path(n, farey::Slope::make(p, q));
    v.certificate.reason = "c(xi) != 0 and Legendrian surgery from n=" + std::to_string(n) +
                           " preserves nonvanishing";
  } else {
    v.status = Status::Unknown;
    v.certificate.reason = "rational slope, c(xi)=0: theorem one-directional";
  }
  return v;
}

}  // namespace hfs::contact
