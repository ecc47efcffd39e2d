#include "epsnc/models.hpp"

#include <algorithm>

#include "epsnc/errors.hpp"

namespace epsnc {

Rational AlgebraSpec::kappa(int degree) const {
  auto it = cumulants.find(degree);
  return it == cumulants.end() ? Rational(0) : it->second;
}

ModelFunctional::ModelFunctional(EpsilonMatrix eps, std::vector<AlgebraSpec> algebras, int degree_cap)
    : eps_(std::move(eps)), algebras_(std::move(algebras)), degree_cap_(degree_cap), decider_(eps_) {
  if (degree_cap_ < 1) throw InvalidArgument("degree cap must be at least 1");
  if (degree_cap_ > kMaxGroundSet) throw InvalidArgument("degree cap above 64 is unsupported");
  for (const auto& spec : algebras_) {
    if (!eps_.has_label(spec.label)) {
      throw InvalidArgument("algebra label " + std::to_string(spec.label) + " is not declared in ε");
    }
    for (const auto& [degree, value] : spec.cumulants) {
      if (degree < 1 || degree > degree_cap_) {
        throw InvalidArgument("cumulant degree " + std::to_string(degree) + " outside [1, degree cap]");
      }
    }
  }
  for (int label : eps_.labels()) {
    auto matches = std::count_if(algebras_.begin(), algebras_.end(), [&](const auto& s) { return s.label == label; });
    if (matches != 1) throw InvalidArgument("label " + std::to_string(label) + " needs exactly one algebra spec");
  }
}

const AlgebraSpec& ModelFunctional::algebra(int label) const {
  for (const auto& spec : algebras_) {
    if (spec.label == label) return spec;
  }
  throw InvalidArgument("label " + std::to_string(label) + " is not declared");
}

Rational ModelFunctional::moment(std::span<const Letter> w) const {
  for (const auto& letter : w) {
    if (!eps_.has_label(letter.label)) {
      throw InvalidArgument("word label " + std::to_string(letter.label) + " is not declared");
    }
    if (!letter.is_unit() && letter.symbol != 0) {
      throw InvalidArgument("model algebras have a single generator (symbol 0)");
    }
  }
  const Word stripped = strip_units(w);
  const int n = static_cast<int>(stripped.size());
  if (n > degree_cap_) {
    throw LimitExceeded("word of length " + std::to_string(n) + " exceeds degree cap " + std::to_string(degree_cap_));
  }
  if (n == 0) return Rational(1);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(stripped); it != cache_.end()) return it->second;
  }

  const Decoration d = decoration_of(stripped);
  const SetPartition ker = kernel(d.labels());
  Rational total(0);
  for (const auto& gamma : enumerate_partitions(n, degree_cap_)) {
    if (!refines(gamma, ker)) continue;
    Rational product(1);
    for (Mask block : gamma.masks()) {
      product *= algebra(d.at(min_element(block))).kappa(std::popcount(block));
      if (product == 0) break;
    }
    // A zero product contributes nothing whether or not Γ is ε-noncrossing.
    if (product == 0) continue;
    if (decider_.decide(DecoratedPartition(gamma, d))) total += product;
  }

  std::lock_guard lock(cache_mutex_);
  cache_.emplace(stripped, total);
  return total;
}

Rational centered_expand(const ModelFunctional& mf, std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n > 62) throw LimitExceeded("word too long for centered expansion");
  std::vector<Rational> means;
  for (const auto& letter : w) means.push_back(mf.moment(std::span<const Letter>(&letter, 1)));
  Rational total(0);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    Word term(w.begin(), w.end());
    Rational coefficient(1);
    for (std::size_t k = 0; k < n; ++k) {
      if ((subset >> k) & 1U) {
        coefficient *= -means[k];
        term[k] = Letter::unit(w[k].label);
      }
    }
    if (coefficient == 0) continue;
    total += coefficient * mf.moment(term);
  }
  return total;
}

namespace {

AlgebraSpec spec(int label, std::initializer_list<std::pair<int, const char*>> values) {
  AlgebraSpec s;
  s.label = label;
  for (const auto& [degree, text] : values) s.cumulants[degree] = parse_rational(text);
  return s;
}

AlgebraSpec generic_first() {
  return spec(1, {{1, "1/2"}, {2, "1"}, {3, "-1/3"}, {4, "2/5"}, {5, "1/7"}, {6, "-3/2"}, {7, "2/9"}, {8, "1/11"}});
}

AlgebraSpec generic_second() {
  return spec(2, {{1, "-1"}, {2, "1/2"}, {3, "2"}, {4, "-1/4"}, {5, "3/5"}, {6, "1/3"}, {7, "-2"}, {8, "5/7"}});
}

AlgebraSpec generic_third() {
  return spec(3, {{1, "1/3"}, {2, "2"}, {3, "1/2"}, {4, "-1"}, {5, "1/4"}, {6, "3"}, {7, "-1/5"}, {8, "1/6"}});
}

}  // namespace

std::vector<NamedModel> bundled_models() {
  std::vector<NamedModel> out;
  for (int e12 = 0; e12 <= 1; ++e12) {
    for (int e11 = 0; e11 <= 1; ++e11) {
      for (int e22 = 0; e22 <= 1; ++e22) {
        EpsilonMatrix eps({1, 2}, {{e11, e12}, {e12, e22}});
        std::string name = "generic-e11_" + std::to_string(e11) + "-e22_" + std::to_string(e22) + "-e12_" +
                           std::to_string(e12);
        out.push_back({name, std::make_shared<ModelFunctional>(
                                 eps, std::vector<AlgebraSpec>{generic_first(), generic_second()}, 8)});
      }
    }
  }
  for (int e12 = 0; e12 <= 1; ++e12) {
    EpsilonMatrix eps({1, 2}, {{0, e12}, {e12, 0}});
    out.push_back({e12 ? "semicircular-tensor" : "semicircular-free",
                   std::make_shared<ModelFunctional>(
                       eps, std::vector<AlgebraSpec>{spec(1, {{2, "1"}}), spec(2, {{2, "1"}})}, 8)});
  }
  EpsilonMatrix three({1, 2, 3}, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  out.push_back({"mixed-three", std::make_shared<ModelFunctional>(
                                    three, std::vector<AlgebraSpec>{generic_first(), generic_second(), generic_third()},
                                    8)});
  return out;
}

}  // namespace epsnc
