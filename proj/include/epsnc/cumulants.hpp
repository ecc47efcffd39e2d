#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>

#include "epsnc/eps_noncrossing.hpp"
#include "epsnc/rational.hpp"
#include "epsnc/word.hpp"

namespace epsnc {

/// Memo of ε-cumulant values keyed by the literal letter sequence.
/// Inserts are idempotent and guarded, so one table can back several
/// threads.
class CumulantTable {
 public:
  CumulantTable() = default;
  CumulantTable(const CumulantTable& other);
  CumulantTable& operator=(const CumulantTable& other);

  std::optional<Rational> find(const Word& w) const;
  /// Throws MissingEntry when w has no entry.
  Rational at(const Word& w) const;
  void insert(const Word& w, const Rational& value);
  std::size_t size() const;
  /// Snapshot sorted by word.
  std::map<Word, Rational> entries() const;

 private:
  std::unordered_map<Word, Rational, WordHash> snapshot_values() const;

  mutable std::mutex mutex_;
  std::unordered_map<Word, Rational, WordHash> values_;
};

/// Recursive ε-cumulant extraction for one moment functional and ε-matrix:
///
///   k(w) = φ(w) - Σ_{Γ ∈ P^{d,ε}_n, Γ ≠ 1̂_n} Π_{B ∈ Γ} k(w|_B)
///
/// with k(a) = φ(a) for single letters. Words are taken literally: swapping
/// commuting letters gives a different cache entry, and agreement of the two
/// values is something to test rather than assume.
class CumulantEngine {
 public:
  CumulantEngine(const MomentFunctional& phi, EpsilonMatrix eps, SearchLimits limits = {});
  CumulantEngine(const MomentFunctional& phi, std::shared_ptr<EpsEnumerator> enumerator);

  const MomentFunctional& functional() const { return *phi_; }
  const EpsilonMatrix& eps() const { return enumerator_->eps(); }
  const std::shared_ptr<EpsEnumerator>& enumerator() const { return enumerator_; }
  const CumulantTable& table() const { return table_; }

  /// k_ε(w) for |w| >= 1.
  Rational cumulant(std::span<const Letter> w);
  /// Π_B k_ε(w|_B) for any partition, with no ε-noncrossing check.
  Rational cumulant_product(const SetPartition& gamma, std::span<const Letter> w);
  /// k_ε^Γ(w); throws InvalidArgument unless Γ is ε-noncrossing for w's
  /// decoration.
  Rational cumulant_on_partition(const SetPartition& gamma, std::span<const Letter> w);

 private:
  const MomentFunctional* phi_;
  std::shared_ptr<EpsEnumerator> enumerator_;
  CumulantTable table_;
};

/// φ^Γ(w): product over blocks of φ on the block's subword.
Rational phi_on_partition(const MomentFunctional& phi, const SetPartition& gamma, std::span<const Letter> w);

Rational cumulant(const MomentFunctional& phi, std::span<const Letter> w, const EpsilonMatrix& eps,
                  SearchLimits limits = {});

/// Γ must carry w's decoration and be ε-noncrossing for it.
Rational cumulant_on_partition(const MomentFunctional& phi, const DecoratedPartition& gamma,
                               std::span<const Letter> w, const EpsilonMatrix& eps, SearchLimits limits = {});

/// Σ_{Γ ∈ P^{d,ε}_n} Π_B table(w|_B). Blocks are read in canonical order and a
/// product stops at its first zero factor, mirroring CumulantEngine, so a table
/// filled by the engine is always sufficient. Other missing entries raise
/// MissingEntry.
Rational moment_from_cumulants(const CumulantTable& table, std::span<const Letter> w, const EpsilonMatrix& eps,
                               SearchLimits limits = {});

}  // namespace epsnc
