#include "epsnc/decorated.hpp"

#include <algorithm>

#include "epsnc/errors.hpp"

namespace epsnc {

Decoration Decoration::restrict_standardize(Mask x) const {
  if (x & ~full_mask(size())) throw InvalidArgument("restriction set is not a subset of [n]");
  std::vector<int> out;
  for (int i : elements_of(x)) out.push_back(at(i));
  return Decoration(std::move(out));
}

Decoration Decoration::transposed(int i) const {
  if (i < 1 || i >= size()) throw InvalidArgument("transposition index " + std::to_string(i) + " out of range");
  Decoration out = *this;
  std::swap(out.labels_[static_cast<std::size_t>(i - 1)], out.labels_[static_cast<std::size_t>(i)]);
  return out;
}

std::string Decoration::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(labels_[k]);
  }
  return out + ")";
}

EpsilonMatrix::EpsilonMatrix(std::vector<int> labels, const std::vector<std::vector<int>>& rows)
    : labels_(std::move(labels)) {
  const std::size_t k = labels_.size();
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("epsilon matrix labels are not distinct");
  }
  if (rows.size() != k) throw InvalidArgument("epsilon matrix is not square");
  entries_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (rows[a].size() != k) throw InvalidArgument("epsilon matrix is not square");
    for (std::size_t b = 0; b < k; ++b) {
      int v = rows[a][b];
      if (v != 0 && v != 1) throw InvalidArgument("epsilon matrix entries must be 0 or 1");
      entries_[a * k + b] = static_cast<std::uint8_t>(v);
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (entries_[a * k + b] != entries_[b * k + a]) throw InvalidArgument("epsilon matrix is not symmetric");
    }
  }
}

EpsilonMatrix EpsilonMatrix::uniform(std::vector<int> labels, bool off_diagonal, bool diagonal) {
  const std::size_t k = labels.size();
  std::vector<std::vector<int>> rows(k, std::vector<int>(k, off_diagonal ? 1 : 0));
  for (std::size_t a = 0; a < k; ++a) rows[a][a] = diagonal ? 1 : 0;
  return EpsilonMatrix(std::move(labels), rows);
}

bool EpsilonMatrix::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t EpsilonMatrix::index_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("label " + std::to_string(label) + " is not declared");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool EpsilonMatrix::operator()(int label_a, int label_b) const {
  return entries_[index_of(label_a) * labels_.size() + index_of(label_b)] != 0;
}

void EpsilonMatrix::set(int label_a, int label_b, bool value) {
  const std::size_t a = index_of(label_a);
  const std::size_t b = index_of(label_b);
  entries_[a * labels_.size() + b] = value;
  entries_[b * labels_.size() + a] = value;
}

std::vector<std::vector<int>> EpsilonMatrix::rows() const {
  const std::size_t k = labels_.size();
  std::vector<std::vector<int>> out(k, std::vector<int>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) out[a][b] = entries_[a * k + b];
  }
  return out;
}

void EpsilonMatrix::validate(const Decoration& d) const {
  for (int label : d.labels()) {
    if (!has_label(label)) throw InvalidArgument("decoration label " + std::to_string(label) + " is not declared");
  }
}

std::vector<EpsilonMatrix> all_epsilon_matrices(const std::vector<int>& labels) {
  const std::size_t k = labels.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) slots.emplace_back(a, b);
  }
  std::vector<EpsilonMatrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<std::vector<int>> rows(k, std::vector<int>(k, 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      int v = static_cast<int>((bits >> s) & 1U);
      rows[slots[s].first][slots[s].second] = v;
      rows[slots[s].second][slots[s].first] = v;
    }
    out.emplace_back(labels, rows);
  }
  return out;
}

DecoratedPartition::DecoratedPartition(SetPartition p, Decoration d)
    : partition(std::move(p)), decoration(std::move(d)) {
  if (partition.size() != decoration.size()) {
    throw InvalidArgument("partition size " + std::to_string(partition.size()) + " does not match decoration length " +
                          std::to_string(decoration.size()));
  }
}

std::string DecoratedPartition::to_string() const {
  if (partition.block_count() == 0) return "{}";
  std::string out;
  for (Mask b : partition.masks()) {
    out += '{';
    bool first = true;
    for (int i : elements_of(b)) {
      if (!first) out += ',';
      out += std::to_string(i) + "_" + std::to_string(decoration.at(i));
      first = false;
    }
    out += '}';
  }
  return out;
}

std::size_t DecoratedPartitionHash::operator()(const DecoratedPartition& dp) const noexcept {
  std::size_t h = SetPartitionHash{}(dp.partition);
  for (int label : dp.decoration.labels()) h = (h ^ static_cast<std::size_t>(label + 0x51)) * 0x100000001b3ULL;
  return h;
}

DecoratedPartition restrict_standardize(const DecoratedPartition& dp, Mask x) {
  return DecoratedPartition(restrict_standardize(dp.partition, x), dp.decoration.restrict_standardize(x));
}

}  // namespace epsnc
