#include "epsnc/word.hpp"

#include <charconv>

#include "epsnc/errors.hpp"

namespace epsnc {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
  for (const auto& l : w) {
    h = (h ^ static_cast<std::size_t>(l.label * 131 + l.symbol + 7)) * 0x100000001b3ULL;
  }
  return h;
}

Word word_from_labels(std::span<const int> labels) {
  Word w;
  for (int label : labels) w.push_back({label, 0});
  return w;
}

Decoration decoration_of(std::span<const Letter> w) {
  std::vector<int> labels;
  labels.reserve(w.size());
  for (const auto& l : w) labels.push_back(l.label);
  return Decoration(std::move(labels));
}

Word subword(std::span<const Letter> w, Mask x) {
  Word out;
  for (int i : elements_of(x)) {
    if (static_cast<std::size_t>(i) > w.size()) throw InvalidArgument("subword position outside word");
    out.push_back(w[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

Word strip_units(std::span<const Letter> w) {
  Word out;
  for (const auto& l : w) {
    if (!l.is_unit()) out.push_back(l);
  }
  return out;
}

Word swap_letters(std::span<const Letter> w, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= w.size()) throw InvalidArgument("swap index out of range");
  Word out(w.begin(), w.end());
  std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
  return out;
}

std::string to_string(std::span<const Letter> w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k].label);
    if (w[k].is_unit()) {
      out += ":u";
    } else if (w[k].symbol != 0) {
      out += ':' + std::to_string(w[k].symbol);
    }
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("malformed integer '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t colon = token.find(':');
    Letter letter;
    letter.label = parse_int(token.substr(0, colon), "word");
    if (colon != std::string_view::npos) {
      std::string_view sym = token.substr(colon + 1);
      if (sym == "u" || sym == "unit") {
        letter.symbol = Letter::kUnit;
      } else {
        letter.symbol = parse_int(sym, "word");
        if (letter.symbol < 0) throw InvalidArgument("generator symbols must be nonnegative");
      }
    }
    out.push_back(letter);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void MomentTable::set(Word w, Rational value) { entries_[strip_units(w)] = std::move(value); }

Rational MomentTable::moment(std::span<const Letter> w) const {
  Word key = strip_units(w);
  if (key.empty()) return Rational(1);
  auto it = entries_.find(key);
  if (it == entries_.end()) throw MissingEntry("no moment data for word " + to_string(key));
  return it->second;
}

}  // namespace epsnc
