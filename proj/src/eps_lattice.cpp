#include "epsnc/eps_lattice.hpp"

#include <algorithm>
#include <bit>

#include "epsnc/errors.hpp"

namespace epsnc {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& bits, std::size_t index) { bits[index / 64] |= std::uint64_t{1} << (index % 64); }

template <typename F>
void for_each_bit(const Bits& bits, F&& f) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    for (std::uint64_t word = bits[w]; word != 0; word &= word - 1) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

std::size_t count(const Bits& bits) {
  std::size_t c = 0;
  for (auto w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace

EpsLattice::EpsLattice(Decoration d, EpsEnumerator& enumerator)
    : decoration_(std::move(d)), elements_(*enumerator.partitions(decoration_)) {
  build_order();
}

EpsLattice::EpsLattice(Decoration d, const EpsilonMatrix& eps, SearchLimits limits) : decoration_(std::move(d)) {
  EpsEnumerator enumerator(eps, limits);
  elements_ = *enumerator.partitions(decoration_);
  build_order();
}

void EpsLattice::build_order() {
  const std::size_t n = elements_.size();
  for (std::size_t a = 0; a < n; ++a) index_.emplace(elements_[a], a);
  words_ = (n + 63) / 64;
  up_.assign(n, Bits(words_, 0));
  down_.assign(n, Bits(words_, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (refines(elements_[a], elements_[b])) {
        set_bit(up_[a], b);
        set_bit(down_[b], a);
      }
    }
  }
}

std::optional<std::size_t> EpsLattice::find(const SetPartition& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t EpsLattice::index_of(const SetPartition& p) const {
  if (auto idx = find(p)) return *idx;
  throw InvalidArgument(p.to_string() + " is not ε-noncrossing for decoration " + decoration_.to_string());
}

bool EpsLattice::leq(std::size_t a, std::size_t b) const { return test(up_[a], b); }

std::vector<std::size_t> EpsLattice::minimal_upper_bounds(std::size_t a, std::size_t b) const {
  const Bits upper = intersect(up_[a], up_[b]);
  std::vector<std::size_t> out;
  for_each_bit(upper, [&](std::size_t u) {
    if (count(intersect(down_[u], upper)) == 1) out.push_back(u);
  });
  return out;
}

std::size_t EpsLattice::meet(std::size_t a, std::size_t b) const {
  const SetPartition m = epsnc::meet(elements_[a], elements_[b]);
  if (auto idx = find(m)) return *idx;
  throw LatticeViolation("meet " + m.to_string() + " of " + elements_[a].to_string() + " and " +
                         elements_[b].to_string() + " is not ε-noncrossing for decoration " + decoration_.to_string());
}

std::size_t EpsLattice::join(std::size_t a, std::size_t b) const {
  // In a finite poset a unique minimal upper bound is the least upper bound,
  // so look for an upper bound lying below all the others.
  const Bits upper = intersect(up_[a], up_[b]);
  std::optional<std::size_t> least;
  for_each_bit(upper, [&](std::size_t u) {
    if (least) return;
    const Bits& above = up_[u];
    for (std::size_t w = 0; w < words_; ++w) {
      if (upper[w] & ~above[w]) return;
    }
    least = u;
  });
  if (least) return *least;
  const auto bounds = minimal_upper_bounds(a, b);
  throw LatticeViolation(std::to_string(bounds.size()) + " minimal upper bounds for " + elements_[a].to_string() +
                         " and " + elements_[b].to_string() + " with decoration " + decoration_.to_string());
}

std::vector<std::pair<std::size_t, std::size_t>> EpsLattice::cover_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_bit(up_[a], [&](std::size_t b) {
      if (b != a && count(intersect(up_[a], down_[b])) == 2) out.emplace_back(a, b);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_comparable(const DecoratedPartition& a, const DecoratedPartition& b) {
  if (a.decoration != b.decoration) {
    throw InvalidArgument("decorations differ: " + a.decoration.to_string() + " vs " + b.decoration.to_string());
  }
}

}  // namespace

DecoratedPartition meet_eps(const DecoratedPartition& a, const DecoratedPartition& b, const EpsilonMatrix& eps,
                            SearchLimits limits) {
  require_comparable(a, b);
  EpsNoncrossingDecider decider(eps, limits);
  if (!decider.decide(a) || !decider.decide(b)) throw InvalidArgument("meet_eps: inputs must be ε-noncrossing");
  DecoratedPartition m(meet(a.partition, b.partition), a.decoration);
  if (!decider.decide(m)) {
    throw LatticeViolation("meet " + m.to_string() + " of ε-noncrossing partitions is not ε-noncrossing");
  }
  return m;
}

DecoratedPartition join_eps(const DecoratedPartition& a, const DecoratedPartition& b, const EpsilonMatrix& eps,
                            SearchLimits limits) {
  require_comparable(a, b);
  EpsLattice lattice(a.decoration, eps, limits);
  const auto ia = lattice.find(a.partition);
  const auto ib = lattice.find(b.partition);
  if (!ia || !ib) throw InvalidArgument("join_eps: inputs must be ε-noncrossing");
  return lattice.decorated(lattice.join(*ia, *ib));
}

Grouping Grouping::from_cuts(int n, std::vector<int> cuts) {
  if (n < 0) throw InvalidArgument("negative grouping size");
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (cuts[k] < 1 || cuts[k] > n - 1) {
      throw InvalidArgument("cut point " + std::to_string(cuts[k]) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    if (k > 0 && cuts[k] <= cuts[k - 1]) throw InvalidArgument("cut points must be strictly increasing");
  }
  Grouping g;
  g.n_ = n;
  g.cuts_ = std::move(cuts);
  return g;
}

Grouping Grouping::trivial(int n) {
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) cuts.push_back(i);
  return from_cuts(n, std::move(cuts));
}

int Grouping::group_of(int position) const {
  if (position < 1 || position > n_) throw InvalidArgument("position outside grouping");
  return static_cast<int>(std::lower_bound(cuts_.begin(), cuts_.end(), position) - cuts_.begin()) + 1;
}

Mask Grouping::group_mask(int group) const {
  if (group < 1 || group > group_count()) throw InvalidArgument("group index out of range");
  const int lo = group == 1 ? 1 : cuts_[static_cast<std::size_t>(group - 2)] + 1;
  const int hi = group == group_count() ? n_ : cuts_[static_cast<std::size_t>(group - 1)];
  return full_mask(hi) & ~full_mask(lo - 1);
}

std::vector<Grouping> label_constant_groupings(const Decoration& d) {
  const int n = d.size();
  std::vector<int> forced;
  std::vector<int> free;
  for (int i = 1; i < n; ++i) (d.at(i) != d.at(i + 1) ? forced : free).push_back(i);
  std::vector<Grouping> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    std::vector<int> cuts = forced;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((bits >> k) & 1U) cuts.push_back(free[k]);
    }
    std::sort(cuts.begin(), cuts.end());
    out.push_back(Grouping::from_cuts(n, std::move(cuts)));
  }
  return out;
}

Decoration group_labels(const Decoration& fine, const Grouping& g) {
  if (fine.size() != g.size()) throw InvalidArgument("decoration length does not match grouping");
  std::vector<int> labels;
  for (int j = 1; j <= g.group_count(); ++j) {
    const auto members = elements_of(g.group_mask(j));
    const int label = fine.at(members.front());
    for (int i : members) {
      if (fine.at(i) != label) throw InvalidArgument("group " + std::to_string(j) + " mixes labels");
    }
    labels.push_back(label);
  }
  return Decoration(std::move(labels));
}

DecoratedPartition lift_inverse_image(const DecoratedPartition& gamma, const Grouping& g) {
  if (gamma.size() != g.group_count()) {
    throw InvalidArgument("partition over [" + std::to_string(gamma.size()) + "] does not match " +
                          std::to_string(g.group_count()) + " groups");
  }
  std::vector<Mask> masks;
  for (Mask block : gamma.partition.masks()) {
    Mask lifted = 0;
    for (int j : elements_of(block)) lifted |= g.group_mask(j);
    masks.push_back(lifted);
  }
  std::vector<int> labels;
  for (int i = 1; i <= g.size(); ++i) labels.push_back(gamma.decoration.at(g.group_of(i)));
  return {SetPartition::from_masks(g.size(), std::move(masks)), Decoration(std::move(labels))};
}

bool join_condition(const DecoratedPartition& phi, const Grouping& g, const DecoratedPartition& gamma,
                    const EpsilonMatrix& eps, SearchLimits limits) {
  const DecoratedPartition target = lift_inverse_image(gamma, g);
  if (phi.decoration != target.decoration) {
    throw InvalidArgument("Φ is not decorated by d ∘ s");
  }
  const DecoratedPartition zero =
      lift_inverse_image(DecoratedPartition(SetPartition::finest(gamma.size()), gamma.decoration), g);
  return join_eps(phi, zero, eps, limits) == target;
}

}  // namespace epsnc
