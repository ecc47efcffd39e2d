#include "epsnc/eps_noncrossing.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "epsnc/errors.hpp"

namespace epsnc {

namespace {

void require_move_index(const DecoratedPartition& dp, int i) {
  if (i < 1 || i >= dp.size()) {
    throw InvalidArgument("move index " + std::to_string(i) + " outside [1, " + std::to_string(dp.size() - 1) + "]");
  }
}

Mask swap_adjacent_bits(Mask m, int i) {
  const Mask lo = element_bit(i);
  const Mask hi = element_bit(i + 1);
  const bool has_lo = (m & lo) != 0;
  const bool has_hi = (m & hi) != 0;
  if (has_lo == has_hi) return m;
  return m ^ (lo | hi);
}

std::vector<DecoratedPartition> orbit_unsorted(const DecoratedPartition& dp, const EpsilonMatrix& eps,
                                               std::size_t& budget) {
  std::unordered_set<DecoratedPartition, DecoratedPartitionHash> seen{dp};
  std::vector<DecoratedPartition> order{dp};
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (budget == 0) throw LimitExceeded("state limit exceeded while exploring an allowed orbit");
    --budget;
    const DecoratedPartition current = order[head];
    for (int i = 1; i < current.size(); ++i) {
      if (!is_allowed_move(current, i, eps)) continue;
      DecoratedPartition next = transpose(current, i);
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  return order;
}

}  // namespace

bool is_allowed_move(const DecoratedPartition& dp, int i, const EpsilonMatrix& eps) {
  require_move_index(dp, i);
  const int a = dp.decoration.at(i);
  const int b = dp.decoration.at(i + 1);
  if (!eps(a, b)) return false;
  return a != b || !dp.partition.same_block(i, i + 1);
}

DecoratedPartition transpose(const DecoratedPartition& dp, int i) {
  require_move_index(dp, i);
  std::vector<Mask> masks;
  masks.reserve(dp.partition.block_count());
  for (Mask b : dp.partition.masks()) masks.push_back(swap_adjacent_bits(b, i));
  return DecoratedPartition(SetPartition::from_masks(dp.size(), std::move(masks)), dp.decoration.transposed(i));
}

DecoratedPartition apply_move(const DecoratedPartition& dp, int i, const EpsilonMatrix& eps) {
  if (!is_allowed_move(dp, i, eps)) {
    throw InvalidArgument("transposition " + std::to_string(i) + " is not an allowed move for " + dp.to_string());
  }
  return transpose(dp, i);
}

std::vector<DecoratedPartition> allowed_orbit(const DecoratedPartition& dp, const EpsilonMatrix& eps,
                                              std::size_t max_states) {
  eps.validate(dp.decoration);
  auto orbit = orbit_unsorted(dp, eps, max_states);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

EpsNoncrossingDecider::EpsNoncrossingDecider(EpsilonMatrix eps, SearchLimits limits)
    : eps_(std::move(eps)), limits_(limits) {}

bool EpsNoncrossingDecider::decide(const DecoratedPartition& dp) {
  eps_.validate(dp.decoration);
  std::lock_guard lock(mutex_);
  std::size_t budget = limits_.max_states;
  return decide_locked(dp, budget);
}

bool EpsNoncrossingDecider::decide_locked(const DecoratedPartition& dp, std::size_t& budget) {
  if (dp.size() == 0) return true;
  if (auto it = memo_.find(dp); it != memo_.end()) return it->second;

  // Orbit exploration is interleaved with reduction attempts so that a
  // reducible state stops the walk early. Every visited state shares the
  // verdict; a negative verdict is only reached after the whole orbit.
  const Mask all = full_mask(dp.size());
  std::unordered_set<DecoratedPartition, DecoratedPartitionHash> seen{dp};
  std::vector<DecoratedPartition> order{dp};
  bool reducible = false;
  for (std::size_t head = 0; head < order.size() && !reducible; ++head) {
    if (budget == 0) throw LimitExceeded("state limit exceeded in ε-noncrossing search");
    --budget;
    const DecoratedPartition state = order[head];
    if (auto it = memo_.find(state); it != memo_.end()) {
      reducible = it->second;
      break;
    }
    for (Mask block : state.partition.masks()) {
      if (is_interval(block) && decide_locked(restrict_standardize(state, all & ~block), budget)) {
        reducible = true;
        break;
      }
    }
    for (int i = 1; i < state.size() && !reducible; ++i) {
      if (!is_allowed_move(state, i, eps_)) continue;
      DecoratedPartition next = transpose(state, i);
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  for (const auto& state : order) memo_.emplace(state, reducible);
  return reducible;
}

bool EpsNoncrossingDecider::decide_greedy(const DecoratedPartition& dp) const {
  eps_.validate(dp.decoration);
  DecoratedPartition current = dp;
  while (current.size() > 0) {
    std::size_t budget = limits_.max_states;
    auto orbit = orbit_unsorted(current, eps_, budget);
    std::sort(orbit.begin(), orbit.end());
    bool reduced = false;
    for (const auto& state : orbit) {
      for (Mask block : state.partition.masks()) {
        if (is_interval(block)) {
          current = restrict_standardize(state, full_mask(state.size()) & ~block);
          reduced = true;
          break;
        }
      }
      if (reduced) break;
    }
    if (!reduced) return false;
  }
  return true;
}

std::size_t EpsNoncrossingDecider::cached_states() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

bool is_eps_noncrossing(const DecoratedPartition& dp, const EpsilonMatrix& eps, SearchLimits limits) {
  EpsNoncrossingDecider decider(eps, limits);
  return decider.decide(dp);
}

std::vector<DecoratedPartition> enumerate_eps_nc(const Decoration& d, const EpsilonMatrix& eps, SearchLimits limits) {
  EpsEnumerator enumerator(eps, limits);
  std::vector<DecoratedPartition> out;
  for (const auto& p : *enumerator.partitions(d)) out.emplace_back(p, d);
  return out;
}

EpsEnumerator::EpsEnumerator(EpsilonMatrix eps, SearchLimits limits) : decider_(std::move(eps), limits) {}

std::shared_ptr<const std::vector<SetPartition>> EpsEnumerator::partitions(const Decoration& d) {
  std::vector<int> key(d.labels().begin(), d.labels().end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  decider_.eps().validate(d);
  const int max_n = decider_.limits().max_n;
  if (d.size() > max_n) {
    throw LimitExceeded("enumerate_eps_nc: n = " + std::to_string(d.size()) + " exceeds limit " +
                        std::to_string(max_n));
  }
  auto result = std::make_shared<std::vector<SetPartition>>();
  for (auto& p : enumerate_partitions(d.size(), max_n)) {
    if (decider_.decide(DecoratedPartition(p, d))) result->push_back(std::move(p));
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

std::size_t LabelVectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = v.size();
  for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 0x100000001b3ULL;
  return h;
}

bool in_admissible(std::span<const int> labels, const EpsilonMatrix& eps) {
  const std::size_t n = labels.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (labels[k] != labels[l]) continue;
      bool separated = false;
      for (std::size_t p = k + 1; p < l && !separated; ++p) {
        separated = labels[p] != labels[k] && !eps(labels[p], labels[k]);
      }
      if (!separated) return false;
    }
  }
  return true;
}

}  // namespace epsnc
