#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epsnc/decorated.hpp"
#include "epsnc/eps_noncrossing.hpp"

namespace epsnc {

/// The poset P^{d,ε}_n with its order relation precomputed as bitsets.
///
/// Meets and joins are answered by search over the full element list, and
/// both assert the lattice property they rely on: a meet must land back in
/// the set, a join must be the unique minimal upper bound. Either failure
/// raises LatticeViolation.
class EpsLattice {
 public:
  EpsLattice(Decoration d, EpsEnumerator& enumerator);
  EpsLattice(Decoration d, const EpsilonMatrix& eps, SearchLimits limits = {});

  const Decoration& decoration() const { return decoration_; }
  std::size_t size() const { return elements_.size(); }
  const SetPartition& element(std::size_t index) const { return elements_[index]; }
  const std::vector<SetPartition>& elements() const { return elements_; }
  DecoratedPartition decorated(std::size_t index) const { return {elements_[index], decoration_}; }

  std::optional<std::size_t> find(const SetPartition& p) const;
  /// Index of p; throws InvalidArgument if p is not ε-noncrossing.
  std::size_t index_of(const SetPartition& p) const;

  bool leq(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> minimal_upper_bounds(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;

  /// Pairs (a, b) with b covering a, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_relations() const;

 private:
  void build_order();
  bool test(const std::vector<std::uint64_t>& set, std::size_t index) const {
    return (set[index / 64] >> (index % 64)) & 1U;
  }

  Decoration decoration_;
  std::vector<SetPartition> elements_;
  std::unordered_map<SetPartition, std::size_t, SetPartitionHash> index_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> up_;    // up_[a]: every b with a <= b
  std::vector<std::vector<std::uint64_t>> down_;  // down_[a]: every b with b <= a
};

/// Meet of two ε-noncrossing partitions with the same decoration. This is the
/// meet of the underlying partitions; a result outside P^{d,ε}_n raises
/// LatticeViolation.
DecoratedPartition meet_eps(const DecoratedPartition& a, const DecoratedPartition& b, const EpsilonMatrix& eps,
                            SearchLimits limits = {});

/// Least upper bound in P^{d,ε}_n, found by filtering the enumeration.
DecoratedPartition join_eps(const DecoratedPartition& a, const DecoratedPartition& b, const EpsilonMatrix& eps,
                            SearchLimits limits = {});

/// Splitting of [n] into m consecutive groups, given by cut points
/// 1 <= p_1 < ... < p_{m-1} <= n-1. Group j is {p_{j-1}+1, ..., p_j}.
class Grouping {
 public:
  Grouping() = default;
  /// Throws InvalidArgument unless the cuts are strictly increasing in [1, n-1].
  static Grouping from_cuts(int n, std::vector<int> cuts);
  /// Each position in its own group.
  static Grouping trivial(int n);

  int size() const { return n_; }
  int group_count() const { return n_ == 0 ? 0 : static_cast<int>(cuts_.size()) + 1; }
  std::span<const int> cuts() const { return cuts_; }

  /// s(i): the group (1-based) containing position i.
  int group_of(int position) const;
  Mask group_mask(int group) const;

  friend bool operator==(const Grouping&, const Grouping&) = default;

 private:
  int n_ = 0;
  std::vector<int> cuts_;
};

/// Every grouping of [n] whose groups carry a single label of `d`.
std::vector<Grouping> label_constant_groupings(const Decoration& d);

/// Decoration of the groups, d(j) = d̃(any position of group j). Throws
/// InvalidArgument if some group mixes labels.
Decoration group_labels(const Decoration& fine, const Grouping& g);

/// Inverse image of Γ (over [m]) under the surjection s : [n] -> [m], with
/// decoration d ∘ s.
DecoratedPartition lift_inverse_image(const DecoratedPartition& gamma, const Grouping& g);

/// Φ ∨ 0̃_m = Γ̃ in P^{d̃,ε}_n.
bool join_condition(const DecoratedPartition& phi, const Grouping& g, const DecoratedPartition& gamma,
                    const EpsilonMatrix& eps, SearchLimits limits = {});

}  // namespace epsnc
