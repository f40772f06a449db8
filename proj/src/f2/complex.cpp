#include "hfs/f2/complex.hpp"

#include <algorithm>
#include <numeric>

#include "hfs/error.hpp"

namespace hfs::f2 {

GradedF2Complex::GradedF2Complex(std::vector<GeneratorInfo> generators, F2Matrix boundary)
    : generators_(std::move(generators)), boundary_(std::move(boundary)) {
  if (boundary_.rows() != generators_.size() || boundary_.cols() != generators_.size()) {
    throw Error(ErrorKind::InvalidComplex,
                "boundary is " + std::to_string(boundary_.rows()) + "x" +
                    std::to_string(boundary_.cols()) + " for " +
                    std::to_string(generators_.size()) + " generators");
  }
  index_.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!index_.emplace(generators_[i].label, i).second) {
      throw Error(ErrorKind::InvalidComplex, "duplicate generator label '" +
                                                 generators_[i].label + "'");
    }
  }
}

std::optional<std::size_t> GradedF2Complex::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GradedF2Complex::has_maslov() const noexcept {
  return !generators_.empty() &&
         std::all_of(generators_.begin(), generators_.end(),
                     [](const GeneratorInfo& g) { return g.maslov.has_value(); });
}

GradedF2Complex GradedF2Complex::restrict_to(std::span<const std::size_t> indices) const {
  std::vector<std::ptrdiff_t> slot(size(), -1);
  std::vector<GeneratorInfo> gens;
  gens.reserve(indices.size());
  for (std::size_t p = 0; p < indices.size(); ++p) {
    slot.at(indices[p]) = static_cast<std::ptrdiff_t>(p);
    gens.push_back(generators_[indices[p]]);
  }
  F2Matrix d(indices.size(), indices.size());
  for (std::size_t p = 0; p < indices.size(); ++p) {
    for (std::size_t r : boundary_.column(indices[p])) {
      if (slot[r] >= 0) d.set(static_cast<std::size_t>(slot[r]), p, true);
    }
  }
  return GradedF2Complex(std::move(gens), std::move(d));
}

DSquaredReport check_d_squared(const GradedF2Complex& c) {
  const F2Matrix dd = multiply(c.boundary(), c.boundary());
  for (std::size_t src = 0; src < dd.cols(); ++src) {
    if (!dd.column(src).empty()) {
      const std::size_t dst = dd.column(src).front();
      return {false, std::make_pair(c.generator(src).label, c.generator(dst).label)};
    }
  }
  return {};
}

bool maslov_homogeneous(const GradedF2Complex& c) {
  if (!c.has_maslov()) return true;
  for (std::size_t col = 0; col < c.size(); ++col) {
    for (std::size_t row : c.boundary().column(col)) {
      if (*c.generator(row).maslov != *c.generator(col).maslov - 1) return false;
    }
  }
  return true;
}

namespace {

void require_d_squared_zero(const GradedF2Complex& c) {
  const auto report = check_d_squared(c);
  if (!report.ok) {
    throw Error(ErrorKind::InvalidComplex, "d^2 != 0: " + report.violation->first + " -> " +
                                               report.violation->second);
  }
}

void require_filtered(const GradedF2Complex& c) {
  for (std::size_t col = 0; col < c.size(); ++col) {
    for (std::size_t row : c.boundary().column(col)) {
      if (c.generator(row).grading > c.generator(col).grading) {
        throw Error(ErrorKind::InvalidComplex,
                    "differential raises grading: " + c.generator(col).label + " -> " +
                        c.generator(row).label);
      }
    }
  }
}

std::vector<std::string> labels_of(const std::vector<GeneratorInfo>& gens,
                                   std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(gens[i].label);
  return out;
}

}  // namespace

Reduction::Reduction(const GradedF2Complex& c, const simd::Kernels& k)
    : generators_(c.generators()), kernels_(&k) {
  const std::size_t n = c.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return generators_[a].grading < generators_[b].grading;
  });
  position_.resize(n);
  for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;

  reduced_ = BitMatrix(n, n);
  transform_ = BitMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row : c.boundary().column(col)) {
      reduced_.set(position_[row], position_[col], true);
    }
    transform_.set(col, col, true);
  }

  pivot_owner_.assign(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    std::ptrdiff_t low = reduced_.low(j, k);
    while (low >= 0 && pivot_owner_[static_cast<std::size_t>(low)] >= 0) {
      const auto src = static_cast<std::size_t>(pivot_owner_[static_cast<std::size_t>(low)]);
      reduced_.add_column(j, src, k);
      transform_.add_column(j, src, k);
      low = reduced_.low(j, k);
    }
    if (low >= 0) {
      pivot_owner_[static_cast<std::size_t>(low)] = static_cast<std::ptrdiff_t>(j);
      ++boundary_rank_;
    }
  }

  essential_slot_.assign(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced_.low(j, k) < 0 && pivot_owner_[j] < 0) {
      essential_slot_[j] = static_cast<std::ptrdiff_t>(essential_.size());
      essential_.push_back(j);
    }
  }
}

std::vector<HomologyClass> Reduction::basis() const {
  std::vector<HomologyClass> out;
  out.reserve(essential_.size());
  for (std::size_t pos : essential_) {
    std::vector<std::size_t> support;
    for (std::size_t p = 0; p <= pos; ++p) {
      if (transform_.get(p, pos)) support.push_back(order_[p]);
    }
    const GeneratorInfo& born = generators_[order_[pos]];
    out.push_back({labels_of(generators_, std::move(support)), born.grading, born.maslov});
  }
  return out;
}

std::vector<bool> Reduction::class_of(std::span<const std::size_t> chain) const {
  const std::size_t n = generators_.size();
  BitMatrix work(n, 1);
  for (std::size_t idx : chain) {
    const std::size_t p = position_.at(idx);
    work.set(p, 0, !work.get(p, 0));
  }
  std::vector<bool> coords(essential_.size(), false);
  auto column = work.column(0);
  for (std::ptrdiff_t top = work.low(0, *kernels_); top >= 0; top = work.low(0, *kernels_)) {
    const auto t = static_cast<std::size_t>(top);
    if (pivot_owner_[t] >= 0) {
      kernels_->xor_into(column.data(),
                         reduced_.column(static_cast<std::size_t>(pivot_owner_[t])).data(),
                         column.size());
    } else if (essential_slot_[t] >= 0) {
      coords[static_cast<std::size_t>(essential_slot_[t])].flip();
      kernels_->xor_into(column.data(), transform_.column(t).data(), column.size());
    } else {
      throw Error(ErrorKind::InvalidComplex, "chain is not a cycle (at " +
                                                 generators_[order_[t]].label + ")");
    }
  }
  return coords;
}

std::map<int, std::size_t> homology_ranks(const GradedF2Complex& c, const simd::Kernels& k) {
  require_d_squared_zero(c);
  require_filtered(c);
  const Reduction red(c, k);
  std::map<int, std::size_t> ranks;
  for (const auto& cls : red.basis()) ++ranks[cls.grading];
  return ranks;
}

std::map<int, std::size_t> maslov_homology_ranks(const GradedF2Complex& c,
                                                 const simd::Kernels& k) {
  require_d_squared_zero(c);
  if (!c.has_maslov() || !maslov_homogeneous(c)) {
    throw Error(ErrorKind::InvalidComplex, "complex is not maslov graded");
  }
  const Reduction red(c, k);
  std::map<int, std::size_t> ranks;
  for (const auto& cls : red.basis()) ++ranks[*cls.maslov];
  return ranks;
}

std::size_t total_homology_rank(const GradedF2Complex& c, const simd::Kernels& k) {
  require_d_squared_zero(c);
  return c.size() - 2 * rank(c.boundary(), k);
}

std::vector<std::vector<std::string>> ConnectingMap::kernel_witnesses() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& combo : kernel_basis(matrix)) {
    std::map<std::string, bool> toggled;
    for (std::size_t q : combo) {
      for (const auto& label : quotient_basis[q].cycle) toggled[label] = !toggled[label];
    }
    std::vector<std::string> cycle;
    for (const auto& [label, on] : toggled) {
      if (on) cycle.push_back(label);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

ShortExactSequence::ShortExactSequence(const GradedF2Complex& total,
                                       std::span<const std::string> sub_labels,
                                       const simd::Kernels& k)
    : total_(total), kernels_(&k) {
  require_d_squared_zero(total_);
  to_sub_.assign(total_.size(), -1);
  std::vector<bool> in_sub(total_.size(), false);
  for (const auto& label : sub_labels) {
    const auto idx = total_.index_of(label);
    if (!idx) throw Error(ErrorKind::NotASubcomplex, "unknown generator '" + label + "'");
    in_sub[*idx] = true;
  }
  for (std::size_t i = 0; i < total_.size(); ++i) {
    if (!in_sub[i]) {
      quot_index_.push_back(i);
      continue;
    }
    for (std::size_t r : total_.boundary().column(i)) {
      if (!in_sub[r]) {
        throw Error(ErrorKind::NotASubcomplex, "d(" + total_.generator(i).label + ") contains " +
                                                   total_.generator(r).label +
                                                   " outside the subcomplex");
      }
    }
    to_sub_[i] = static_cast<std::ptrdiff_t>(sub_index_.size());
    sub_index_.push_back(i);
  }
  sub_ = total_.restrict_to(sub_index_);
  quotient_ = total_.restrict_to(quot_index_);
  sub_red_.emplace(sub_, k);
  quot_red_.emplace(quotient_, k);
}

std::vector<bool> ShortExactSequence::boundary_class(std::span<const std::size_t> lift) const {
  std::vector<bool> hit(total_.size(), false);
  for (std::size_t idx : lift) {
    for (std::size_t r : total_.boundary().column(idx)) hit[r] = !hit[r];
  }
  std::vector<std::size_t> image;
  for (std::size_t r = 0; r < hit.size(); ++r) {
    if (!hit[r]) continue;
    if (to_sub_[r] < 0) {
      throw Error(ErrorKind::InvalidComplex,
                  "lift does not project to a quotient cycle (boundary hits " +
                      total_.generator(r).label + ")");
    }
    image.push_back(static_cast<std::size_t>(to_sub_[r]));
  }
  return sub_red_->class_of(image);
}

ConnectingMap ShortExactSequence::connecting_map() const {
  ConnectingMap out;
  out.quotient_basis = quot_red_->basis();
  out.sub_basis = sub_red_->basis();
  out.matrix = F2Matrix(out.sub_basis.size(), out.quotient_basis.size());
  for (std::size_t q = 0; q < out.quotient_basis.size(); ++q) {
    std::vector<std::size_t> lift;
    for (const auto& label : out.quotient_basis[q].cycle) {
      lift.push_back(*total_.index_of(label));
    }
    const auto coords = boundary_class(lift);
    for (std::size_t s = 0; s < coords.size(); ++s) {
      if (coords[s]) out.matrix.set(s, q, true);
    }
  }
  return out;
}

std::size_t ShortExactSequence::inclusion_rank() const {
  const Reduction total_red(total_, *kernels_);
  const auto sub_classes = sub_red_->basis();
  F2Matrix map(total_red.homology_rank(), sub_classes.size());
  for (std::size_t s = 0; s < sub_classes.size(); ++s) {
    std::vector<std::size_t> chain;
    for (const auto& label : sub_classes[s].cycle) chain.push_back(*total_.index_of(label));
    const auto coords = total_red.class_of(chain);
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (coords[t]) map.set(t, s, true);
    }
  }
  return rank(map, *kernels_);
}

ConnectingMap connecting_homomorphism(const GradedF2Complex& total,
                                      std::span<const std::string> sub_labels,
                                      const simd::Kernels& k) {
  return ShortExactSequence(total, sub_labels, k).connecting_map();
}

}  // namespace hfs::f2
