#pragma once

#include <span>
#include <vector>

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"

namespace epsnc {

/// k_ε(w) == 0 for a word of length >= 2 containing a UNIT letter.
bool unit_lemma_check(const MomentFunctional& phi, std::span<const Letter> w, const EpsilonMatrix& eps,
                      SearchLimits limits = {});

/// Functional on "product letters": letter j (symbol j, 0-based) stands for
/// the product of the j-th group of a fixed word, and moments are delegated
/// to the base functional on the concatenation.
class GroupedFunctional final : public MomentFunctional {
 public:
  /// The groups must be label-constant.
  GroupedFunctional(const MomentFunctional& base, Word fine, const Grouping& g);

  /// (b_1, ..., b_m).
  const Word& grouped_word() const { return grouped_; }
  Rational moment(std::span<const Letter> w) const override;

 private:
  const MomentFunctional* base_;
  std::vector<Word> groups_;
  Word grouped_;
};

struct Theorem8Sides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of
///
///   k_ε^Γ(b_1, ..., b_m) = Σ_{Φ ∈ P^{d̃,ε}_n, Φ ∨ 0̃_m = Γ̃} k_ε^Φ(a_1, ..., a_n)
///
/// for one word and grouping, reusable across every Γ over the groups. The
/// right-hand side is bucketed by Φ ∨ 0̃_m once at construction.
class Theorem8Evaluator {
 public:
  /// `fine` computes cumulants of the original word; `fine_lattice` must be
  /// P^{d̃,ε}_n for that word's decoration.
  Theorem8Evaluator(CumulantEngine& fine, const EpsLattice& fine_lattice, Word w, Grouping g);
  Theorem8Evaluator(const Theorem8Evaluator&) = delete;
  Theorem8Evaluator& operator=(const Theorem8Evaluator&) = delete;

  const Decoration& group_decoration() const { return group_decoration_; }
  /// Γ over [m] must be ε-noncrossing for the group decoration.
  Theorem8Sides evaluate(const SetPartition& gamma);

 private:
  Word word_;
  Grouping grouping_;
  Decoration group_decoration_;
  GroupedFunctional grouped_phi_;
  CumulantEngine coarse_;
  const EpsLattice* fine_lattice_;
  std::vector<Rational> bucket_sums_;  // indexed by fine lattice element Φ ∨ 0̃_m
};

Theorem8Sides theorem8_check(const MomentFunctional& phi, std::span<const Letter> w, const Grouping& g,
                             const DecoratedPartition& gamma, const EpsilonMatrix& eps, SearchLimits limits = {});

/// φ^Γ and k_ε^Γ are unchanged by swapping letters i, i+1 and replacing Γ by
/// τ_i(Γ). Throws InvalidArgument if τ_i is not an allowed move.
bool move_invariance_check(CumulantEngine& engine, const DecoratedPartition& gamma, std::span<const Letter> w, int i);
bool move_invariance_check(const MomentFunctional& phi, const DecoratedPartition& gamma, std::span<const Letter> w,
                           int i, const EpsilonMatrix& eps, SearchLimits limits = {});

}  // namespace epsnc
