#include "hfs/surgery.hpp"

#include <algorithm>

#include "hfs/cfk/region.hpp"
#include "hfs/error.hpp"
#include "hfs/f2/complex.hpp"
#include "hfs/parallel.hpp"

namespace hfs::surgery {

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(ErrorKind::NonPositiveSlope, "n must be positive, got " + std::to_string(n));
}

const f2::simd::Kernels& kernels_of(const Options& opts) {
  return opts.kernels != nullptr ? *opts.kernels : f2::simd::active();
}

std::size_t total(const std::map<int, std::size_t>& ranks) {
  std::size_t t = 0;
  for (const auto& [g, r] : ranks) t += r;
  return t;
}

// Leftmost i any hook-family region touches, one step past it.
int window_floor(const cfk::BifilteredComplex& c, int m) {
  int top = 0;
  for (const auto& g : c.generators()) top = std::max(top, g.alexander);
  return std::min(0, m - top) - 1;
}

}  // namespace

std::vector<int> spinc_range(int n) {
  require_positive(n);
  // n = 1 leaves the displayed bounds empty; the single label is 0
  if (n == 1) return {0};
  std::vector<int> out;
  for (int m = -(n / 2) + 1; m <= n / 2; ++m) out.push_back(m);
  return out;
}

std::vector<int> spinc_window(int n) {
  require_positive(n);
  std::vector<int> out;
  for (int m = -((n + 1) / 2) + 1; m <= n / 2; ++m) out.push_back(m);
  return out;
}

int canonical_m(int m, int n) {
  require_positive(n);
  const int lo = -((n + 1) / 2) + 1;
  const int r = ((m - lo) % n + n) % n;
  return lo + r;
}

std::string Gate::describe() const {
  return "n >= 2g check: g=" + std::to_string(genus) + ", n=" + std::to_string(n) + ", " +
         (ok ? "ok" : "fails");
}

Gate require_large_surgery(const cfk::BifilteredComplex& c, int n) {
  require_positive(n);
  Gate gate{cfk::genus(c), n, false};
  gate.ok = n >= 2 * gate.genus;
  if (!gate.ok) throw Error(ErrorKind::SlopeTooSmall, gate.describe());
  return gate;
}

SurgerySlice hf_hat_surgery(const cfk::BifilteredComplex& c, int n, int m, const Options& opts) {
  require_large_surgery(c, n);
  const auto& k = kernels_of(opts);
  SurgerySlice slice;
  slice.m = canonical_m(m, n);
  slice.ranks = f2::homology_ranks(cfk::extract(c, cfk::RegionSpec::hook(slice.m)), k);
  slice.total = total(slice.ranks);
  if (opts.oracle) slice.oracle_total = oracle_hook_rank(c, slice.m, k);
  return slice;
}

std::size_t CoreHFKTable::total_hfk() const {
  std::size_t t = 0;
  for (const auto& r : rows) t += r.rank_s + r.rank_q;
  return t;
}

std::size_t CoreHFKTable::total_hf() const {
  std::size_t t = 0;
  for (const auto& r : rows) t += r.rank_x;
  return t;
}

const CoreRow& CoreHFKTable::row(int m) const {
  for (const auto& r : rows) {
    if (r.m == m) return r;
  }
  throw std::out_of_range("no core table row for m=" + std::to_string(m));
}

std::optional<int> CoreHFKTable::lowest_nonzero_sub_row() const {
  std::optional<int> best;
  int best_a = 0;
  for (const auto& r : rows) {
    if (r.rank_s == 0) continue;
    if (!best || r.rel_a_s < best_a) {
      best = r.m;
      best_a = r.rel_a_s;
    }
  }
  return best;
}

bool CoreHFKTable::grading_equations_hold() const {
  for (const auto& a : rows) {
    if (a.rel_a_s - a.rel_a_q != n) return false;
    for (const auto& b : rows) {
      if (a.rel_a_s - b.rel_a_s != -(a.m - b.m)) return false;
      if (a.rel_a_q - b.rel_a_q != -(a.m - b.m)) return false;
    }
  }
  const auto base = std::find_if(rows.begin(), rows.end(), [](const CoreRow& r) { return r.m == 0; });
  return base == rows.end() || base->rel_a_s == 0;
}

bool CoreHFKTable::oracle_agrees() const {
  return std::all_of(rows.begin(), rows.end(), [](const CoreRow& r) {
    return (!r.oracle_s || *r.oracle_s == r.rank_s) && (!r.oracle_q || *r.oracle_q == r.rank_q) &&
           (!r.oracle_x || *r.oracle_x == r.rank_x);
  });
}

CoreHFKTable core_hfk_table(const cfk::BifilteredComplex& c, int n, const Options& opts) {
  require_large_surgery(c, n);
  const auto& k = kernels_of(opts);
  const auto window = spinc_window(n);
  CoreHFKTable table;
  table.n = n;
  table.rows.resize(window.size());
  parallel_for(window.size(), opts.threads, [&](std::size_t idx) {
    const int m = window[idx];
    CoreRow row;
    row.m = m;
    row.rank_s = f2::total_homology_rank(cfk::extract(c, cfk::RegionSpec::hook_sub(m)), k);
    row.rank_q = f2::total_homology_rank(cfk::extract(c, cfk::RegionSpec::hook_quot(m)), k);
    row.rank_x = f2::total_homology_rank(cfk::extract(c, cfk::RegionSpec::hook(m)), k);
    row.rel_a_s = -m;
    row.rel_a_q = -m - n;
    if (opts.oracle) {
      row.oracle_s = oracle_sub_rank(c, m, k);
      row.oracle_q = oracle_quot_rank(c, m, k);
      row.oracle_x = oracle_hook_rank(c, m, k);
    }
    table.rows[idx] = row;
  });
  return table;
}

LSpaceCertificate lspace_certificate(const cfk::BifilteredComplex& c, int n, const Options& opts) {
  require_large_surgery(c, n);
  if (!cfk::is_fibered_like(c)) {
    throw Error(ErrorKind::NotFibered, "top knot Floer group does not have rank 1");
  }
  const auto table = core_hfk_table(c, n, opts);
  LSpaceCertificate cert;
  cert.hfk_total = table.total_hfk();
  cert.hf_total = table.total_hf();
  cert.order = static_cast<std::size_t>(n);
  cert.holds = cert.hfk_total == cert.hf_total && cert.hf_total == cert.order;
  return cert;
}

std::size_t truncation_rank(const cfk::BifilteredComplex& c,
                            const std::function<bool(int, int)>& upper,
                            const std::function<bool(int, int)>& lower, int i_min,
                            const f2::simd::Kernels& k) {
  const auto big = cfk::extract_window(c, i_min, 0, [&](int i, int j) { return upper(i, j); });
  std::vector<std::string> sub;
  for (const auto& g : big.generators()) {
    // Recover (i, j): the label carries i, the grading is j.
    const auto at = g.label.find('@');
    const int i = at == std::string::npos ? 0 : std::stoi(g.label.substr(at + 1));
    if (lower(i, g.grading)) sub.push_back(g.label);
  }
  const f2::ShortExactSequence ses(big, sub, k);
  const std::size_t rank_u = f2::total_homology_rank(big, k);
  const std::size_t rank_l = ses.sub_reduction().homology_rank();
  return rank_u + rank_l - 2 * ses.inclusion_rank();
}

std::size_t oracle_hook_rank(const cfk::BifilteredComplex& c, int m, const f2::simd::Kernels& k) {
  return truncation_rank(
      c, [m](int i, int j) { return std::max(i, j - m) <= 0; },
      [m](int i, int j) { return std::max(i, j - m) <= -1; }, window_floor(c, m), k);
}

std::size_t oracle_sub_rank(const cfk::BifilteredComplex& c, int m, const f2::simd::Kernels& k) {
  return truncation_rank(
      c, [m](int i, int j) { return i <= -1 && j <= m; },
      [m](int i, int j) { return i <= -1 && j <= m - 1; }, window_floor(c, m), k);
}

std::size_t oracle_quot_rank(const cfk::BifilteredComplex& c, int m, const f2::simd::Kernels& k) {
  return truncation_rank(
      c, [m](int i, int j) { return i <= 0 && j <= m; },
      [m](int i, int j) { return i <= -1 && j <= m; }, window_floor(c, m), k);
}

}  // namespace hfs::surgery
