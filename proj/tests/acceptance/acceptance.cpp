// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"
#include "epsnc/errors.hpp"
#include "epsnc/identities.hpp"
#include "epsnc/models.hpp"
#include "epsnc/oracles.hpp"
#include "epsnc/verification.hpp"

using namespace epsnc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later failures are counted but not described.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  void expect_eq(const Rational& expected, const Rational& actual, const std::string& what) {
    expect(expected == actual, what + ": expected " + to_string(expected) + ", got " + to_string(actual));
  }
  void absorb(const Report& r) {
    for (const auto& e : r.entries()) {
      expect(e.pass, e.check + " on " + to_string(e.word) + ": expected " + e.expected + ", got " + e.actual);
    }
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!summary.empty()) s << ", " << summary;
    if (failures_) s << "; " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<int> iota_labels(int n) {
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  return labels;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 12);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<EpsilonMatrix> all_test_matrices() {
  auto out = two_label_matrices();
  for (auto& m : three_label_sample()) out.push_back(std::move(m));
  return out;
}

Outcome endpoint_counts() {
  Tally t;
  for (int n = 1; n <= 6; ++n) {
    const auto labels = iota_labels(n);
    const Decoration d(labels);
    const auto all = enumerate_eps_nc(d, EpsilonMatrix::uniform(labels, true, false)).size();
    const auto none = enumerate_eps_nc(d, EpsilonMatrix::uniform(labels, false, false)).size();
    t.expect_eq(Rational(oracles::bell_number(n)), Rational(static_cast<long>(all)), "Bell(" + std::to_string(n) + ")");
    t.expect_eq(Rational(oracles::catalan_number(n)), Rational(static_cast<long>(none)),
                "Catalan(" + std::to_string(n) + ")");
  }
  return t.outcome("n = 1..6");
}

Outcome single_commuting_pair() {
  Tally t;
  const EpsilonMatrix eps({1, 2, 3, 4}, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
  const Decoration d{1, 2, 3, 4};
  EpsEnumerator enumerator(eps);
  const auto& parts = *enumerator.partitions(d);
  t.expect(parts.size() == 15, "expected 15 ε-noncrossing partitions, got " + std::to_string(parts.size()));
  std::vector<SetPartition> extra;
  for (const auto& p : parts) {
    if (!is_noncrossing(p)) extra.push_back(p);
  }
  const auto crossing = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
  t.expect(extra.size() == 1 && extra.front() == crossing, "the only crossing member must be {1,3}{2,4}");

  // φ(a1 a2 a3 a4) = Σ_{π ∈ NC(4)} k_π + k(a1, a3) k(a2, a4), on a generic
  // functional and on a model with one algebra per label.
  const Word w = word_from_labels(d.labels());
  const std::vector<AlgebraSpec> specs = {
      {1, {{1, Rational(1, 2)}, {2, Rational(1)}}},
      {2, {{1, Rational(-1)}, {2, Rational(1, 3)}}},
      {3, {{1, Rational(2)}, {2, Rational(3, 4)}}},
      {4, {{1, Rational(1, 5)}, {2, Rational(2)}}},
  };
  const ModelFunctional model(eps, specs);
  const RandomFunctional generic(7);
  for (const MomentFunctional* phi : {static_cast<const MomentFunctional*>(&model),
                                      static_cast<const MomentFunctional*>(&generic)}) {
    CumulantEngine engine(*phi, eps);
    Rational rhs(0);
    for (const auto& p : enumerate_partitions(4)) {
      if (is_noncrossing(p)) rhs += engine.cumulant_product(p, w);
    }
    rhs += engine.cumulant(subword(w, 0b0101)) * engine.cumulant(subword(w, 0b1010));
    t.expect_eq(phi->moment(w), rhs, "displayed moment formula");
  }
  t.expect_eq(Rational(-1, 5) /* (1/2)(-1)(2)(1/5) */, model.moment(w), "model moment of a1 a2 a3 a4");
  return t.outcome("15 partitions, formula holds on model and generic functionals");
}

Outcome constant_decoration_endpoints() {
  Tally t;
  std::mt19937_64 rng(1729);
  SearchLimits limits;
  limits.max_n = 8;
  for (int diagonal = 0; diagonal <= 1; ++diagonal) {
    const EpsilonMatrix eps({1}, {{diagonal}});
    for (int trial = 0; trial < 10; ++trial) {
      MomentTable table;
      std::vector<Rational> moments;
      for (int k = 1; k <= 8; ++k) {
        moments.push_back(random_rational(rng));
        table.set(Word(static_cast<std::size_t>(k), Letter{1, 0}), moments.back());
      }
      const auto expected = diagonal ? oracles::classical_cumulants(moments) : oracles::free_cumulants(moments);
      CumulantEngine engine(table, eps, limits);
      for (int k = 1; k <= 8; ++k) {
        t.expect_eq(expected[static_cast<std::size_t>(k - 1)],
                    engine.cumulant(Word(static_cast<std::size_t>(k), Letter{1, 0})),
                    std::string(diagonal ? "classical" : "free") + " cumulant of degree " + std::to_string(k));
      }
    }
  }
  return t.outcome("degrees 1..8, 10 random sequences per endpoint");
}

Outcome lattice_axioms() {
  Tally t;
  for (const auto& eps : all_test_matrices()) t.absorb(check_lattice_axioms(eps, 5));
  return t.outcome("8 matrices on 2 labels, 8 on 3 labels, n <= 5");
}

Outcome restriction_stability() {
  Tally t;
  for (const auto& eps : all_test_matrices()) {
    EpsEnumerator enumerator(eps);
    EpsNoncrossingDecider decider(eps);
    const std::vector<int> labels(eps.labels().begin(), eps.labels().end());
    for (const auto& seq : label_sequences(labels, 1, 6)) {
      const Decoration d(seq);
      bool ok = true;
      std::string witness;
      for (const auto& p : *enumerator.partitions(d)) {
        const DecoratedPartition dp(p, d);
        for (Mask x = 0; x <= full_mask(d.size()) && ok; ++x) {
          if (!decider.decide(restrict_standardize(dp, x))) {
            ok = false;
            witness = dp.to_string() + " restricted by mask " + std::to_string(x);
          }
        }
        if (!ok) break;
      }
      t.expect(ok, witness);
    }
  }
  return t.outcome("n <= 6");
}

Outcome interval_bijection() {
  Tally t;
  for (const auto& eps : all_test_matrices()) t.absorb(check_interval_bijection(eps, 6));
  return t.outcome("n <= 6, all label-constant groupings");
}

Outcome unit_lemma() {
  Tally t;
  for (const auto& [name, model] : bundled_models()) {
    CumulantEngine engine(*model, model->eps());
    const std::vector<int> labels(model->eps().labels().begin(), model->eps().labels().end());
    for (const auto& seq : label_sequences(labels, 2, 5)) {
      for (std::uint64_t units = 1; units < (std::uint64_t{1} << seq.size()); ++units) {
        Word w = word_from_labels(seq);
        for (std::size_t k = 0; k < seq.size(); ++k) {
          if ((units >> k) & 1U) w[k] = Letter::unit(w[k].label);
        }
        t.expect_eq(Rational(0), engine.cumulant(w), name + " " + to_string(w));
      }
    }
  }
  return t.outcome("lengths 2..5, bundled models");
}

Outcome grouping_theorem() {
  Tally t;
  for (const auto& [name, model] : bundled_models()) {
    CumulantEngine engine(*model, model->eps());
    const std::vector<int> labels(model->eps().labels().begin(), model->eps().labels().end());
    for (const auto& seq : label_sequences(labels, 1, 6)) {
      const Decoration d(seq);
      const Word w = word_from_labels(seq);
      const EpsLattice fine(d, *engine.enumerator());
      for (const auto& g : label_constant_groupings(d)) {
        Theorem8Evaluator evaluator(engine, fine, w, g);
        const EpsLattice coarse(evaluator.group_decoration(), *engine.enumerator());
        for (const auto& gamma : coarse.elements()) {
          const auto sides = evaluator.evaluate(gamma);
          t.expect_eq(sides.lhs, sides.rhs, name + " " + to_string(w) + " Γ=" + gamma.to_string());
        }
      }
    }
  }
  return t.outcome("n <= 6, bundled models");
}

Outcome main_theorem() {
  Tally t;
  for (const auto& [name, model] : bundled_models()) {
    t.absorb(verify_mixed_cumulants_vanish(*model, 6));
    t.absorb(verify_eps_independence(*model, 5));
  }
  return t.outcome("mixed cumulants n <= 6, ε-independence n <= 5");
}

Outcome roundtrip() {
  Tally t;
  std::mt19937_64 rng(20160229);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<int>> rows(3, std::vector<int>(3));
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) rows[a][b] = rows[b][a] = static_cast<int>(rng() & 1U);
    }
    const EpsilonMatrix eps({1, 2, 3}, rows);
    const RandomFunctional phi(rng());
    const int n = 1 + static_cast<int>(rng() % 6);
    Word w;
    for (int i = 0; i < n; ++i) {
      Letter l{1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      if (rng() % 10 == 0) l.symbol = Letter::kUnit;
      w.push_back(l);
    }
    CumulantEngine engine(phi, eps);
    (void)engine.cumulant(w);
    for (const auto& [sub, value] : engine.table().entries()) {
      t.expect_eq(phi.moment(sub), moment_from_cumulants(engine.table(), sub, eps), "roundtrip " + to_string(sub));
    }
  }
  return t.outcome("100 random trials, n <= 6");
}

Outcome known_distributions() {
  Tally t;
  const std::vector<AlgebraSpec> standard = {{1, {{2, Rational(1)}}}};
  const ModelFunctional semicircle(EpsilonMatrix({1}, {{0}}), standard);
  const ModelFunctional gaussian(EpsilonMatrix({1}, {{1}}), standard);
  const std::vector<long> semicircle_moments = {1, 0, 2, 0, 5};
  const std::vector<long> gaussian_moments = {1, 0, 3, 0, 15};
  const std::vector<Rational> kappa = {0, 1, 0, 0, 0, 0};
  const auto free_oracle = oracles::free_moments(kappa);
  const auto classical_oracle = oracles::classical_moments(kappa);
  for (int k = 2; k <= 6; ++k) {
    const Word w(static_cast<std::size_t>(k), Letter{1, 0});
    const auto i = static_cast<std::size_t>(k - 2);
    t.expect_eq(Rational(semicircle_moments[i]), semicircle.moment(w), "semicircular m" + std::to_string(k));
    t.expect_eq(free_oracle[i + 1], semicircle.moment(w), "semicircular oracle m" + std::to_string(k));
    t.expect_eq(Rational(gaussian_moments[i]), gaussian.moment(w), "Gaussian m" + std::to_string(k));
    t.expect_eq(classical_oracle[i + 1], gaussian.moment(w), "Gaussian oracle m" + std::to_string(k));
  }
  const Word alternating = word_from_labels(std::vector<int>{1, 2, 1, 2});
  for (int e12 = 0; e12 <= 1; ++e12) {
    const ModelFunctional pair(EpsilonMatrix({1, 2}, {{0, e12}, {e12, 0}}),
                               {{1, {{2, Rational(1)}}}, {2, {{2, Rational(1)}}}});
    t.expect_eq(Rational(e12), pair.moment(alternating), "φ(x1 x2 x1 x2) with ε12 = " + std::to_string(e12));
  }
  return t.outcome("semicircular, Gaussian, tensor/free mixed");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"endpoint counts match Bell and Catalan numbers", endpoint_counts},
      {"one commuting pair on four labels", single_commuting_pair},
      {"constant decorations give classical and free cumulants", constant_decoration_endpoints},
      {"meet closure and unique joins", lattice_axioms},
      {"restriction stability", restriction_stability},
      {"interval bijection under grouping", interval_bijection},
      {"unit lemma", unit_lemma},
      {"grouped cumulants as sums over the fine lattice", grouping_theorem},
      {"ε-independence iff mixed cumulants vanish", main_theorem},
      {"moment-cumulant roundtrip", roundtrip},
      {"known distributions", known_distributions},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first << " (" << o.detail
              << ", " << static_cast<int>(seconds * 1000) << " ms)" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
