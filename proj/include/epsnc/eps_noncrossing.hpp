#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "epsnc/decorated.hpp"

namespace epsnc {

struct SearchLimits {
  /// Maximum number of orbit states expanded by one top-level query.
  std::size_t max_states = 1'000'000;
  /// Largest n accepted by enumerate_eps_nc.
  int max_n = 8;
};

/// τ_i (1 <= i <= n-1) is allowed iff ε_{d(i)d(i+1)} = 1 and either the
/// labels differ or i, i+1 lie in different blocks. Throws InvalidArgument
/// when i is out of range.
bool is_allowed_move(const DecoratedPartition& dp, int i, const EpsilonMatrix& eps);

/// Transports partition and decoration along τ_i without checking
/// allowed-ness.
DecoratedPartition transpose(const DecoratedPartition& dp, int i);

/// τ_i(dp); throws InvalidArgument if the move is not allowed.
DecoratedPartition apply_move(const DecoratedPartition& dp, int i, const EpsilonMatrix& eps);

/// Closure of dp under allowed moves, sorted. Throws LimitExceeded past
/// `max_states`.
std::vector<DecoratedPartition> allowed_orbit(const DecoratedPartition& dp, const EpsilonMatrix& eps,
                                              std::size_t max_states = SearchLimits{}.max_states);

/// Memoized decision procedure for ε-noncrossing-ness.
///
/// A state is reducible when some member of its allowed orbit has a block
/// occupying consecutive positions; removing that block and standardizing
/// gives a smaller state. The search explores every orbit member and every
/// interval block, so no confluence of the reduction relation is assumed.
/// Allowed moves are involutions whose inverse is again allowed, so the orbit
/// is an equivalence class and the verdict is cached for all its members.
///
/// Instances are safe to share between threads.
class EpsNoncrossingDecider {
 public:
  explicit EpsNoncrossingDecider(EpsilonMatrix eps, SearchLimits limits = {});

  const EpsilonMatrix& eps() const { return eps_; }
  const SearchLimits& limits() const { return limits_; }

  bool decide(const DecoratedPartition& dp);

  /// Follows the first reduction found (orbit in sorted order, blocks in
  /// canonical order) without backtracking. Only used to probe whether
  /// greedy reduction ever disagrees with the exhaustive search.
  bool decide_greedy(const DecoratedPartition& dp) const;

  std::size_t cached_states() const;

 private:
  bool decide_locked(const DecoratedPartition& dp, std::size_t& budget);

  EpsilonMatrix eps_;
  SearchLimits limits_;
  mutable std::mutex mutex_;
  std::unordered_map<DecoratedPartition, bool, DecoratedPartitionHash> memo_;
};

bool is_eps_noncrossing(const DecoratedPartition& dp, const EpsilonMatrix& eps, SearchLimits limits = {});

/// P^{d,ε}_n: the ε-noncrossing partitions for decoration d, in
/// restricted-growth order. Throws LimitExceeded when n > limits.max_n.
std::vector<DecoratedPartition> enumerate_eps_nc(const Decoration& d, const EpsilonMatrix& eps,
                                                 SearchLimits limits = {});

struct LabelVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/// Enumeration sharing one decider, with results cached per decoration.
/// Thread-safe.
class EpsEnumerator {
 public:
  explicit EpsEnumerator(EpsilonMatrix eps, SearchLimits limits = {});

  const EpsilonMatrix& eps() const { return decider_.eps(); }
  EpsNoncrossingDecider& decider() { return decider_; }

  /// Underlying partitions of P^{d,ε}_n, restricted-growth order.
  std::shared_ptr<const std::vector<SetPartition>> partitions(const Decoration& d);
  bool is_eps_noncrossing(const DecoratedPartition& dp) { return decider_.decide(dp); }

 private:
  EpsNoncrossingDecider decider_;
  std::mutex mutex_;
  std::unordered_map<std::vector<int>, std::shared_ptr<const std::vector<SetPartition>>, LabelVectorHash> cache_;
};

/// Membership in I_n^ε: every repeated label must be separated by some label
/// different from it whose ε-entry against it is 0.
bool in_admissible(std::span<const int> labels, const EpsilonMatrix& eps);

}  // namespace epsnc
