#include "epsnc/cumulants.hpp"

#include "epsnc/errors.hpp"

namespace epsnc {

CumulantTable::CumulantTable(const CumulantTable& other) : values_(other.snapshot_values()) {}

CumulantTable& CumulantTable::operator=(const CumulantTable& other) {
  if (this != &other) {
    auto copy = other.snapshot_values();
    std::lock_guard lock(mutex_);
    values_ = std::move(copy);
  }
  return *this;
}

std::unordered_map<Word, Rational, WordHash> CumulantTable::snapshot_values() const {
  std::lock_guard lock(mutex_);
  return values_;
}

std::optional<Rational> CumulantTable::find(const Word& w) const {
  std::lock_guard lock(mutex_);
  if (auto it = values_.find(w); it != values_.end()) return it->second;
  return std::nullopt;
}

Rational CumulantTable::at(const Word& w) const {
  if (auto v = find(w)) return *v;
  throw MissingEntry("no cumulant entry for word " + to_string(w));
}

void CumulantTable::insert(const Word& w, const Rational& value) {
  std::lock_guard lock(mutex_);
  values_.emplace(w, value);
}

std::size_t CumulantTable::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::map<Word, Rational> CumulantTable::entries() const {
  std::lock_guard lock(mutex_);
  return {values_.begin(), values_.end()};
}

CumulantEngine::CumulantEngine(const MomentFunctional& phi, EpsilonMatrix eps, SearchLimits limits)
    : phi_(&phi), enumerator_(std::make_shared<EpsEnumerator>(std::move(eps), limits)) {}

CumulantEngine::CumulantEngine(const MomentFunctional& phi, std::shared_ptr<EpsEnumerator> enumerator)
    : phi_(&phi), enumerator_(std::move(enumerator)) {}

Rational CumulantEngine::cumulant(std::span<const Letter> w) {
  if (w.empty()) throw InvalidArgument("cumulant of the empty word is undefined");
  Word key(w.begin(), w.end());
  if (auto cached = table_.find(key)) return *cached;

  Rational value = phi_->moment(w);
  if (w.size() > 1) {
    const auto partitions = enumerator_->partitions(decoration_of(w));
    for (const auto& gamma : *partitions) {
      if (gamma.block_count() == 1) continue;
      value -= cumulant_product(gamma, w);
    }
  }
  table_.insert(key, value);
  return value;
}

Rational CumulantEngine::cumulant_product(const SetPartition& gamma, std::span<const Letter> w) {
  if (static_cast<std::size_t>(gamma.size()) != w.size()) throw InvalidArgument("partition size does not match word");
  Rational product(1);
  for (Mask block : gamma.masks()) {
    product *= cumulant(subword(w, block));
    if (product == 0) break;
  }
  return product;
}

Rational CumulantEngine::cumulant_on_partition(const SetPartition& gamma, std::span<const Letter> w) {
  if (static_cast<std::size_t>(gamma.size()) != w.size()) throw InvalidArgument("partition size does not match word");
  if (!enumerator_->is_eps_noncrossing(DecoratedPartition(gamma, decoration_of(w)))) {
    throw InvalidArgument(gamma.to_string() + " is not ε-noncrossing for decoration " + decoration_of(w).to_string());
  }
  return cumulant_product(gamma, w);
}

Rational phi_on_partition(const MomentFunctional& phi, const SetPartition& gamma, std::span<const Letter> w) {
  if (static_cast<std::size_t>(gamma.size()) != w.size()) throw InvalidArgument("partition size does not match word");
  Rational product(1);
  for (Mask block : gamma.masks()) product *= phi.moment(subword(w, block));
  return product;
}

Rational cumulant(const MomentFunctional& phi, std::span<const Letter> w, const EpsilonMatrix& eps,
                  SearchLimits limits) {
  CumulantEngine engine(phi, eps, limits);
  return engine.cumulant(w);
}

Rational cumulant_on_partition(const MomentFunctional& phi, const DecoratedPartition& gamma,
                               std::span<const Letter> w, const EpsilonMatrix& eps, SearchLimits limits) {
  if (gamma.decoration != decoration_of(w)) throw InvalidArgument("partition decoration does not match word labels");
  CumulantEngine engine(phi, eps, limits);
  return engine.cumulant_on_partition(gamma.partition, w);
}

Rational moment_from_cumulants(const CumulantTable& table, std::span<const Letter> w, const EpsilonMatrix& eps,
                               SearchLimits limits) {
  Rational total(0);
  for (const auto& gamma : enumerate_eps_nc(decoration_of(w), eps, limits)) {
    Rational product(1);
    for (Mask block : gamma.partition.masks()) {
      product *= table.at(subword(w, block));
      if (product == 0) break;
    }
    total += product;
  }
  return total;
}

}  // namespace epsnc
