#include "epsnc/identities.hpp"

#include <algorithm>

#include "epsnc/errors.hpp"

namespace epsnc {

bool unit_lemma_check(const MomentFunctional& phi, std::span<const Letter> w, const EpsilonMatrix& eps,
                      SearchLimits limits) {
  if (w.size() < 2) throw InvalidArgument("unit lemma needs a word of length at least 2");
  if (std::none_of(w.begin(), w.end(), [](const Letter& l) { return l.is_unit(); })) {
    throw InvalidArgument("unit lemma needs a UNIT letter");
  }
  return cumulant(phi, w, eps, limits) == 0;
}

GroupedFunctional::GroupedFunctional(const MomentFunctional& base, Word fine, const Grouping& g) : base_(&base) {
  if (static_cast<int>(fine.size()) != g.size()) throw InvalidArgument("word length does not match grouping");
  const Decoration labels = group_labels(decoration_of(fine), g);
  for (int j = 1; j <= g.group_count(); ++j) {
    groups_.push_back(subword(fine, g.group_mask(j)));
    grouped_.push_back({labels.at(j), j - 1});
  }
}

Rational GroupedFunctional::moment(std::span<const Letter> w) const {
  Word concatenated;
  for (const auto& letter : w) {
    if (letter.is_unit()) continue;
    if (letter.symbol < 0 || static_cast<std::size_t>(letter.symbol) >= groups_.size()) {
      throw InvalidArgument("unknown product letter " + std::to_string(letter.symbol));
    }
    const Word& group = groups_[static_cast<std::size_t>(letter.symbol)];
    concatenated.insert(concatenated.end(), group.begin(), group.end());
  }
  return base_->moment(concatenated);
}

Theorem8Evaluator::Theorem8Evaluator(CumulantEngine& fine, const EpsLattice& fine_lattice, Word w, Grouping g)
    : word_(std::move(w)),
      grouping_(std::move(g)),
      group_decoration_(group_labels(decoration_of(word_), grouping_)),
      grouped_phi_(fine.functional(), word_, grouping_),
      coarse_(grouped_phi_, fine.enumerator()),
      fine_lattice_(&fine_lattice) {
  if (fine_lattice.decoration() != decoration_of(word_)) {
    throw InvalidArgument("lattice decoration does not match the word");
  }
  const int m = grouping_.group_count();
  const DecoratedPartition zero =
      lift_inverse_image(DecoratedPartition(SetPartition::finest(m), group_decoration_), grouping_);
  const std::size_t zero_index = fine_lattice.index_of(zero.partition);
  bucket_sums_.assign(fine_lattice.size(), Rational(0));
  for (std::size_t phi = 0; phi < fine_lattice.size(); ++phi) {
    const std::size_t joined = fine_lattice.join(phi, zero_index);
    bucket_sums_[joined] += fine.cumulant_product(fine_lattice.element(phi), word_);
  }
}

Theorem8Sides Theorem8Evaluator::evaluate(const SetPartition& gamma) {
  Theorem8Sides sides;
  sides.lhs = coarse_.cumulant_on_partition(gamma, grouped_phi_.grouped_word());
  const DecoratedPartition lifted = lift_inverse_image(DecoratedPartition(gamma, group_decoration_), grouping_);
  sides.rhs = bucket_sums_[fine_lattice_->index_of(lifted.partition)];
  return sides;
}

Theorem8Sides theorem8_check(const MomentFunctional& phi, std::span<const Letter> w, const Grouping& g,
                             const DecoratedPartition& gamma, const EpsilonMatrix& eps, SearchLimits limits) {
  Word word(w.begin(), w.end());
  const Decoration labels = group_labels(decoration_of(word), g);
  if (gamma.decoration != labels) throw InvalidArgument("Γ must be decorated by the group labels");
  CumulantEngine engine(phi, eps, limits);
  EpsLattice lattice(decoration_of(word), *engine.enumerator());
  Theorem8Evaluator evaluator(engine, lattice, std::move(word), g);
  return evaluator.evaluate(gamma.partition);
}

bool move_invariance_check(CumulantEngine& engine, const DecoratedPartition& gamma, std::span<const Letter> w,
                           int i) {
  if (gamma.decoration != decoration_of(w)) throw InvalidArgument("partition decoration does not match word labels");
  const DecoratedPartition moved = apply_move(gamma, i, engine.eps());
  const Word swapped = swap_letters(w, i);
  const auto& phi = engine.functional();
  return phi_on_partition(phi, gamma.partition, w) == phi_on_partition(phi, moved.partition, swapped) &&
         engine.cumulant_product(gamma.partition, w) == engine.cumulant_product(moved.partition, swapped);
}

bool move_invariance_check(const MomentFunctional& phi, const DecoratedPartition& gamma, std::span<const Letter> w,
                           int i, const EpsilonMatrix& eps, SearchLimits limits) {
  CumulantEngine engine(phi, eps, limits);
  return move_invariance_check(engine, gamma, w, i);
}

}  // namespace epsnc
