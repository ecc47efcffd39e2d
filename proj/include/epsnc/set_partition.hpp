#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace epsnc {

/// Subset of [n] for n <= 64: bit (i - 1) is set iff i belongs to the set.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr Mask element_bit(int i) { return Mask{1} << (i - 1); }
constexpr int min_element(Mask m) { return std::countr_zero(m) + 1; }

/// True iff `m` is a nonempty set of consecutive integers.
constexpr bool is_interval(Mask m) {
  if (m == 0) return false;
  Mask shifted = m >> std::countr_zero(m);
  return (shifted & (shifted + 1)) == 0;
}

/// Order-preserving compression of `m` through the bijection X -> [|X|].
/// Elements of `m` outside `x` are dropped.
Mask compress(Mask m, Mask x);

/// A set partition of [n] in canonical form: blocks sorted by their minimum
/// element, each block stored as a bitmask. n = 0 gives the empty partition.
class SetPartition {
 public:
  SetPartition() = default;

  /// Validates and canonicalizes. Throws InvalidArgument if the blocks are
  /// empty, overlap, or do not cover [n].
  static SetPartition from_masks(int n, std::vector<Mask> blocks);
  /// Same as from_masks with 1-based element lists.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Builds from a restricted growth string (0-based block ids).
  static SetPartition from_restricted_growth(std::span<const int> rgs);

  /// 0̂_n, the partition into singletons.
  static SetPartition finest(int n);
  /// 1̂_n, a single block (empty partition when n = 0).
  static SetPartition coarsest(int n);

  int size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::span<const Mask> masks() const { return blocks_; }
  Mask block(std::size_t index) const { return blocks_[index]; }

  /// Index of the block containing element i (1-based).
  std::size_t block_index_of(int i) const;
  bool same_block(int i, int j) const;

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> restricted_growth() const;

  /// Human-readable form, e.g. "{1,3}{2,4}"; "{}" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition(int n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Mask> blocks_;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

/// Elements of `m` as ascending 1-based integers.
std::vector<int> elements_of(Mask m);
/// Mask of a list of 1-based elements; throws InvalidArgument if any lies
/// outside [n].
Mask mask_of(std::span<const int> elements, int n);

/// All partitions of [n] in restricted-growth-string lexicographic order.
/// Throws LimitExceeded when n > max_n.
std::vector<SetPartition> enumerate_partitions(int n, int max_n = 10);

bool is_noncrossing(const SetPartition& p);

/// Restriction to X followed by standardization onto [|X|].
SetPartition restrict_standardize(const SetPartition& p, Mask x);
SetPartition restrict_standardize(const SetPartition& p, std::span<const int> x);

/// p <= q in the refinement order. Throws InvalidArgument on size mismatch.
bool refines(const SetPartition& p, const SetPartition& q);

SetPartition meet(const SetPartition& p, const SetPartition& q);
SetPartition join(const SetPartition& p, const SetPartition& q);

/// Partition of positions by equal label.
SetPartition kernel(std::span<const int> labels);

}  // namespace epsnc
