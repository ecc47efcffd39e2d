#include "epsnc/set_partition.hpp"

#include <algorithm>

#include "epsnc/errors.hpp"

namespace epsnc {

Mask compress(Mask m, Mask x) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    Mask bit = rest & (~rest + 1);
    if (m & bit) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

SetPartition SetPartition::from_masks(int n, std::vector<Mask> blocks) {
  if (n < 0 || n > kMaxGroundSet) {
    throw InvalidArgument("ground set size " + std::to_string(n) + " outside [0, 64]");
  }
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw InvalidArgument("partition has an empty block");
    if (b & seen) throw InvalidArgument("partition blocks overlap");
    if (b & ~full_mask(n)) throw InvalidArgument("partition block exceeds [n]");
    seen |= b;
  }
  if (seen != full_mask(n)) throw InvalidArgument("partition blocks do not cover [n]");
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& b : blocks) {
    Mask m = 0;
    for (int i : b) {
      if (i < 1 || i > n) throw InvalidArgument("element " + std::to_string(i) + " outside [n]");
      if (m & element_bit(i)) throw InvalidArgument("repeated element " + std::to_string(i));
      m |= element_bit(i);
    }
    masks.push_back(m);
  }
  return from_masks(n, std::move(masks));
}

SetPartition SetPartition::from_restricted_growth(std::span<const int> rgs) {
  const int n = static_cast<int>(rgs.size());
  std::vector<Mask> masks;
  for (int i = 0; i < n; ++i) {
    auto id = static_cast<std::size_t>(rgs[i]);
    if (rgs[i] < 0 || id > masks.size()) throw InvalidArgument("not a restricted growth string");
    if (id == masks.size()) masks.push_back(0);
    masks[id] |= element_bit(i + 1);
  }
  return SetPartition(n, std::move(masks));
}

SetPartition SetPartition::finest(int n) {
  std::vector<Mask> masks;
  for (int i = 1; i <= n; ++i) masks.push_back(element_bit(i));
  return from_masks(n, std::move(masks));
}

SetPartition SetPartition::coarsest(int n) {
  if (n == 0) return {};
  return from_masks(n, {full_mask(n)});
}

std::size_t SetPartition::block_index_of(int i) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k] & element_bit(i)) return k;
  }
  throw InvalidArgument("element " + std::to_string(i) + " outside [n]");
}

bool SetPartition::same_block(int i, int j) const {
  Mask both = element_bit(i) | element_bit(j);
  for (Mask b : blocks_) {
    if ((b & both) == both) return true;
  }
  return false;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks_.size());
  for (Mask b : blocks_) out.push_back(elements_of(b));
  return out;
}

std::vector<int> SetPartition::restricted_growth() const {
  std::vector<int> rgs(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int i : elements_of(blocks_[k])) rgs[static_cast<std::size_t>(i - 1)] = static_cast<int>(k);
  }
  return rgs;
}

std::string SetPartition::to_string() const {
  if (blocks_.empty()) return "{}";
  std::string out;
  for (Mask b : blocks_) {
    out += '{';
    bool first = true;
    for (int i : elements_of(b)) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    out += '}';
  }
  return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.size()) * 0x9e3779b97f4a7c15ULL;
  for (Mask b : p.masks()) h = (h ^ std::hash<Mask>{}(b)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  for (; m != 0; m &= m - 1) out.push_back(min_element(m));
  return out;
}

Mask mask_of(std::span<const int> elements, int n) {
  Mask m = 0;
  for (int i : elements) {
    if (i < 1 || i > n) throw InvalidArgument("element " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
    m |= element_bit(i);
  }
  return m;
}

std::vector<SetPartition> enumerate_partitions(int n, int max_n) {
  if (n < 0) throw InvalidArgument("negative ground set size");
  if (n > max_n) {
    throw LimitExceeded("enumerate_partitions: n = " + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
  }
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Lexicographic walk over restricted growth strings; prefix_max[i] is the
  // largest block id among positions 0..i.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(SetPartition::from_restricted_growth(rgs));
    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  auto blocks = p.masks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      // Walk the union in order; an abab pattern shows up as four or more runs.
      int runs = 0;
      int last = -1;
      for (Mask rest = blocks[a] | blocks[b]; rest != 0; rest &= rest - 1) {
        int owner = (blocks[a] & rest & (~rest + 1)) ? 0 : 1;
        if (owner != last) {
          ++runs;
          last = owner;
        }
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

SetPartition restrict_standardize(const SetPartition& p, Mask x) {
  if (x & ~full_mask(p.size())) throw InvalidArgument("restriction set is not a subset of [n]");
  std::vector<Mask> masks;
  for (Mask b : p.masks()) {
    if (b & x) masks.push_back(compress(b, x));
  }
  return SetPartition::from_masks(std::popcount(x), std::move(masks));
}

SetPartition restrict_standardize(const SetPartition& p, std::span<const int> x) {
  return restrict_standardize(p, mask_of(x, p.size()));
}

namespace {

void require_same_size(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("partitions of different ground sets: " + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()));
  }
}

}  // namespace

bool refines(const SetPartition& p, const SetPartition& q) {
  require_same_size(p, q);
  for (Mask b : p.masks()) {
    bool contained = false;
    for (Mask c : q.masks()) {
      if ((b & c) == b) {
        contained = true;
        break;
      }
    }
    if (!contained) return false;
  }
  return true;
}

SetPartition meet(const SetPartition& p, const SetPartition& q) {
  require_same_size(p, q);
  std::vector<Mask> masks;
  for (Mask b : p.masks()) {
    for (Mask c : q.masks()) {
      if (b & c) masks.push_back(b & c);
    }
  }
  return SetPartition::from_masks(p.size(), std::move(masks));
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
  require_same_size(p, q);
  std::vector<Mask> merged(p.masks().begin(), p.masks().end());
  for (Mask c : q.masks()) {
    Mask acc = c;
    std::vector<Mask> kept;
    for (Mask b : merged) {
      if (b & acc) {
        acc |= b;
      } else {
        kept.push_back(b);
      }
    }
    kept.push_back(acc);
    merged = std::move(kept);
  }
  return SetPartition::from_masks(p.size(), std::move(merged));
}

SetPartition kernel(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Mask> masks;
  std::vector<int> seen;
  for (int i = 0; i < n; ++i) {
    auto it = std::find(seen.begin(), seen.end(), labels[i]);
    if (it == seen.end()) {
      seen.push_back(labels[i]);
      masks.push_back(element_bit(i + 1));
    } else {
      masks[static_cast<std::size_t>(it - seen.begin())] |= element_bit(i + 1);
    }
  }
  return SetPartition::from_masks(n, std::move(masks));
}

}  // namespace epsnc
