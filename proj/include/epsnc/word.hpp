#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epsnc/decorated.hpp"
#include "epsnc/rational.hpp"

namespace epsnc {

/// A generator of the algebra with index `label`, or that algebra's unit.
struct Letter {
  static constexpr int kUnit = -1;

  int label = 0;
  int symbol = 0;

  static Letter unit(int label) { return {label, kUnit}; }
  bool is_unit() const { return symbol == kUnit; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Word of generator 0 for each label.
Word word_from_labels(std::span<const int> labels);
Decoration decoration_of(std::span<const Letter> w);
/// Letters at the positions of `x`, in increasing order.
Word subword(std::span<const Letter> w, Mask x);
Word strip_units(std::span<const Letter> w);
Word swap_letters(std::span<const Letter> w, int i);

/// Compact text form "1:0,2:0,1:u"; symbol 0 is written as the bare label.
std::string to_string(std::span<const Letter> w);
/// Inverse of to_string. Accepts "label", "label:symbol", "label:u".
Word parse_word(std::string_view text);

/// A unital functional on words. UNIT letters must not change the value and
/// the empty word must evaluate to 1.
class MomentFunctional {
 public:
  virtual ~MomentFunctional() = default;
  virtual Rational moment(std::span<const Letter> w) const = 0;
};

/// Moments given explicitly per word. Units are stripped before lookup;
/// words without data raise MissingEntry.
class MomentTable final : public MomentFunctional {
 public:
  void set(Word w, Rational value);
  Rational moment(std::span<const Letter> w) const override;
  const std::map<Word, Rational>& entries() const { return entries_; }

 private:
  std::map<Word, Rational> entries_;
};

}  // namespace epsnc
