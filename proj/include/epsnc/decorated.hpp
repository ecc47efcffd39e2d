#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "epsnc/set_partition.hpp"

namespace epsnc {

/// A labeling d : [n] -> I of positions by algebra indices.
class Decoration {
 public:
  Decoration() = default;
  explicit Decoration(std::vector<int> labels) : labels_(std::move(labels)) {}
  Decoration(std::initializer_list<int> labels) : labels_(labels) {}

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  /// Label of position i (1-based).
  int at(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> labels() const { return labels_; }

  /// st(d|_X): labels of the positions in X, in increasing order.
  Decoration restrict_standardize(Mask x) const;
  /// σ(d) for the adjacent transposition (i, i+1).
  Decoration transposed(int i) const;

  std::string to_string() const;

  friend bool operator==(const Decoration&, const Decoration&) = default;
  friend auto operator<=>(const Decoration&, const Decoration&) = default;

 private:
  std::vector<int> labels_;
};

/// Symmetric {0,1} matrix over a finite declared label set, diagonal included.
class EpsilonMatrix {
 public:
  EpsilonMatrix() = default;
  /// `rows[a][b]` is the entry for labels[a], labels[b]. Labels must be
  /// distinct; rows must be square, symmetric, and 0/1 valued.
  EpsilonMatrix(std::vector<int> labels, const std::vector<std::vector<int>>& rows);

  /// Every off-diagonal entry set to `off_diagonal`, every diagonal entry to
  /// `diagonal`.
  static EpsilonMatrix uniform(std::vector<int> labels, bool off_diagonal, bool diagonal);

  std::span<const int> labels() const { return labels_; }
  std::size_t label_count() const { return labels_.size(); }
  bool has_label(int label) const;
  /// Position of a label in labels(); throws InvalidArgument if undeclared.
  std::size_t index_of(int label) const;

  bool operator()(int label_a, int label_b) const;
  void set(int label_a, int label_b, bool value);

  std::vector<std::vector<int>> rows() const;

  /// Throws InvalidArgument unless every label of `d` is declared.
  void validate(const Decoration& d) const;

  friend bool operator==(const EpsilonMatrix&, const EpsilonMatrix&) = default;

 private:
  std::vector<int> labels_;
  std::vector<std::uint8_t> entries_;
};

/// Every symmetric 0/1 matrix on the given labels, diagonal included, in a
/// fixed order (upper-triangle entries read as a binary counter).
std::vector<EpsilonMatrix> all_epsilon_matrices(const std::vector<int>& labels);

/// A set partition whose positions carry a decoration of the same length.
struct DecoratedPartition {
  SetPartition partition;
  Decoration decoration;

  DecoratedPartition() = default;
  /// Throws InvalidArgument if the sizes differ.
  DecoratedPartition(SetPartition p, Decoration d);

  int size() const { return partition.size(); }
  std::string to_string() const;

  friend bool operator==(const DecoratedPartition&, const DecoratedPartition&) = default;
  friend auto operator<=>(const DecoratedPartition&, const DecoratedPartition&) = default;
};

struct DecoratedPartitionHash {
  std::size_t operator()(const DecoratedPartition& dp) const noexcept;
};

/// Restriction of both partition and decoration to X, standardized onto [|X|].
DecoratedPartition restrict_standardize(const DecoratedPartition& dp, Mask x);

}  // namespace epsnc
