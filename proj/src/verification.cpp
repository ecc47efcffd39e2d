#include "epsnc/verification.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <unordered_map>

#include "epsnc/cumulants.hpp"
#include "epsnc/eps_lattice.hpp"
#include "epsnc/errors.hpp"
#include "epsnc/identities.hpp"
#include "epsnc/json_io.hpp"
#include "epsnc/oracles.hpp"

namespace epsnc {

void Report::add(ReportEntry entry) { entries_.push_back(std::move(entry)); }

void Report::add(std::string check, Word word, const Rational& expected, const Rational& actual) {
  entries_.push_back({std::move(check), std::move(word), to_string(expected), to_string(actual), expected == actual});
}

void Report::merge(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  for (const auto& [k, v] : other.notes_) notes_[k] = v;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.pass; }));
}

nlohmann::json to_json(const Report& report, bool include_passing) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries()) {
    if (!include_passing && e.pass) continue;
    entries.push_back({{"check", e.check},
                       {"word", json_io::word_to_json(e.word)},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"pass", e.pass}});
  }
  nlohmann::json notes = nlohmann::json::object();
  for (const auto& [k, v] : report.notes()) notes[k] = v;
  return {{"checks", report.entries().size()},
          {"failures", report.failures()},
          {"pass", report.passed()},
          {"notes", notes},
          {"entries", entries}};
}

std::vector<std::vector<int>> label_sequences(const std::vector<int>& labels, int min_n, int max_n) {
  std::vector<std::vector<int>> out;
  const auto k = labels.size();
  for (int n = std::max(min_n, 0); n <= max_n; ++n) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<int> seq;
      for (auto d : digits) seq.push_back(labels[d]);
      out.push_back(std::move(seq));
      int pos = n - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] + 1 == k) digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

Report verify_eps_independence(const ModelFunctional& mf, int max_n) {
  Report report;
  const auto& eps = mf.eps();
  const std::vector<int> labels(eps.labels().begin(), eps.labels().end());
  for (const auto& seq : label_sequences(labels, 1, std::min(max_n, mf.degree_cap()))) {
    const Word w = word_from_labels(seq);
    if (in_admissible(seq, eps)) report.add("centered_moment", w, Rational(0), centered_expand(mf, w));
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i - 1] == seq[i] || !eps(seq[i - 1], seq[i])) continue;
      report.add("commutation", w, mf.moment(w), mf.moment(swap_letters(w, static_cast<int>(i))));
    }
  }
  return report;
}

Report verify_mixed_cumulants_vanish(const ModelFunctional& mf, int max_n) {
  Report report;
  CumulantEngine engine(mf, mf.eps());
  const std::vector<int> labels(mf.eps().labels().begin(), mf.eps().labels().end());
  for (const auto& seq : label_sequences(labels, 1, std::min(max_n, mf.degree_cap()))) {
    const Word w = word_from_labels(seq);
    const Rational k = engine.cumulant(w);
    const bool mixed = std::any_of(seq.begin(), seq.end(), [&](int l) { return l != seq.front(); });
    if (mixed) {
      report.add("mixed_cumulant", w, Rational(0), k);
    } else {
      report.add("single_label_cumulant", w, mf.algebra(seq.front()).kappa(static_cast<int>(seq.size())), k);
    }
  }
  return report;
}

std::vector<EpsilonMatrix> two_label_matrices() { return all_epsilon_matrices({1, 2}); }

std::vector<EpsilonMatrix> three_label_sample() {
  using Rows = std::vector<std::vector<int>>;
  const std::vector<Rows> sample = {
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},  // free
      {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},  // classical
      {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},  // one commuting pair
      {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},  // path 1-2-3
      {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}},  // path with mixed diagonal
      {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}},  // one commuting pair, classical diagonal
      {{0, 1, 1}, {1, 1, 0}, {1, 0, 0}},  // star at 1
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  // free pairs, classical diagonal
  };
  std::vector<EpsilonMatrix> out;
  for (const auto& rows : sample) out.emplace_back(std::vector<int>{1, 2, 3}, rows);
  return out;
}

namespace {

std::string label_list(std::span<const int> labels) {
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? "," : "") + std::to_string(labels[k]);
  return out;
}

std::string eps_tag(const EpsilonMatrix& eps) { return json_io::to_json(eps).dump(); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

// Lattices keyed by decoration, sharing one enumerator.
class LatticeCache {
 public:
  explicit LatticeCache(std::shared_ptr<EpsEnumerator> enumerator) : enumerator_(std::move(enumerator)) {}

  const EpsLattice& get(const Decoration& d) {
    std::vector<int> key(d.labels().begin(), d.labels().end());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, std::make_unique<EpsLattice>(d, *enumerator_)).first;
    return *it->second;
  }

 private:
  std::shared_ptr<EpsEnumerator> enumerator_;
  std::unordered_map<std::vector<int>, std::unique_ptr<EpsLattice>, LabelVectorHash> cache_;
};

Report endpoints_suite(const SuiteOptions& opt) {
  Report report;
  // Counts at the two ends: every partition, or exactly the noncrossing ones.
  for (int n = 1; n <= opt.max_n; ++n) {
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    const Decoration d(labels);
    const auto all_commute = EpsilonMatrix::uniform(labels, true, false);
    const auto none_commute = EpsilonMatrix::uniform(labels, false, false);
    SearchLimits limits;
    limits.max_n = std::max(limits.max_n, n);
    const Word w = word_from_labels(labels);
    report.add("count_all_commuting", w, Rational(oracles::bell_number(n)),
               Rational(static_cast<long>(enumerate_eps_nc(d, all_commute, limits).size())));
    report.add("count_none_commuting", w, Rational(oracles::catalan_number(n)),
               Rational(static_cast<long>(enumerate_eps_nc(d, none_commute, limits).size())));
  }

  // Constant decorations reduce to classical (ε_ii = 1) or free (ε_ii = 0) cumulants.
  std::mt19937_64 rng(opt.seed);
  for (int diagonal = 0; diagonal <= 1; ++diagonal) {
    const EpsilonMatrix eps({1}, {{diagonal}});
    for (int trial = 0; trial < 3; ++trial) {
      MomentTable table;
      std::vector<Rational> moments;
      for (int k = 1; k <= opt.max_n; ++k) {
        moments.push_back(random_rational(rng));
        table.set(Word(static_cast<std::size_t>(k), Letter{1, 0}), moments.back());
      }
      const auto expected = diagonal ? oracles::classical_cumulants(moments) : oracles::free_cumulants(moments);
      SearchLimits limits;
      limits.max_n = std::max(limits.max_n, opt.max_n);
      CumulantEngine engine(table, eps, limits);
      for (int k = 1; k <= opt.max_n; ++k) {
        Word w(static_cast<std::size_t>(k), Letter{1, 0});
        report.add(diagonal ? "classical_endpoint" : "free_endpoint", w, expected[static_cast<std::size_t>(k - 1)],
                   engine.cumulant(w));
      }
    }
  }

  // Single-label model moments agree with the oracle moment formulas.
  for (const auto& [name, model] : opt.models) {
    const int top = std::min(opt.max_n, model->degree_cap());
    for (int label : model->eps().labels()) {
      std::vector<Rational> kappas;
      for (int k = 1; k <= top; ++k) kappas.push_back(model->algebra(label).kappa(k));
      const auto expected =
          model->eps()(label, label) ? oracles::classical_moments(kappas) : oracles::free_moments(kappas);
      for (int k = 1; k <= top; ++k) {
        Word w(static_cast<std::size_t>(k), Letter{label, 0});
        report.add(name + "/single_label_moment", w, expected[static_cast<std::size_t>(k - 1)], model->moment(w));
      }
    }
  }
  return report;
}

Report lattice_suite(const SuiteOptions& opt) {
  Report report;
  std::size_t greedy_checked = 0;
  std::size_t greedy_disagreements = 0;
  auto matrices = two_label_matrices();
  for (auto& m : three_label_sample()) matrices.push_back(std::move(m));
  for (const auto& eps : matrices) {
    const Report axioms = check_lattice_axioms(eps, opt.max_n);
    greedy_checked += std::stoul(axioms.notes().at("greedy_checked"));
    greedy_disagreements += std::stoul(axioms.notes().at("greedy_disagreements"));
    report.merge(axioms);
    report.merge(check_interval_bijection(eps, opt.max_n));
  }
  report.note("greedy_checked", std::to_string(greedy_checked));
  report.note("greedy_disagreements", std::to_string(greedy_disagreements));
  report.note("greedy_max_n", std::to_string(std::min(opt.max_n, kGreedyProbeMaxN)));
  return report;
}

Report restriction_suite(const SuiteOptions& opt) {
  Report report;
  auto run = [&](const EpsilonMatrix& eps, int max_n) {
    EpsNoncrossingDecider decider(eps);
    EpsEnumerator enumerator(eps);
    const std::vector<int> labels(eps.labels().begin(), eps.labels().end());
    for (const auto& seq : label_sequences(labels, 1, max_n)) {
      const Decoration d(seq);
      std::string failure;
      for (const auto& p : *enumerator.partitions(d)) {
        const DecoratedPartition dp(p, d);
        for (Mask x = 0; x <= full_mask(d.size()) && failure.empty(); ++x) {
          const auto restricted = restrict_standardize(dp, x);
          if (!decider.decide(restricted)) {
            failure = dp.to_string() + " restricted to " + label_list(elements_of(x)) + " gives " +
                      restricted.to_string();
          }
        }
        if (!failure.empty()) break;
      }
      report.add({"restriction " + eps_tag(eps), word_from_labels(seq), "all restrictions ε-noncrossing",
                  failure.empty() ? "all restrictions ε-noncrossing" : failure, failure.empty()});
    }
  };
  for (const auto& eps : two_label_matrices()) run(eps, opt.max_n);
  for (const auto& eps : three_label_sample()) run(eps, std::min(opt.max_n, 5));
  return report;
}

Report roundtrip_suite(const SuiteOptions& opt) {
  Report report;
  std::mt19937_64 rng(opt.seed);
  const int top = std::min(opt.max_n, 8);
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::vector<std::vector<int>> rows(3, std::vector<int>(3));
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) rows[a][b] = rows[b][a] = static_cast<int>(rng() & 1U);
    }
    const EpsilonMatrix eps({1, 2, 3}, rows);
    RandomFunctional phi(rng());
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(top));
    Word w;
    for (int i = 0; i < n; ++i) {
      Letter l{1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      if (rng() % 10 == 0) l.symbol = Letter::kUnit;
      w.push_back(l);
    }
    CumulantEngine engine(phi, eps);
    (void)engine.cumulant(w);
    const auto& table = engine.table();
    for (const auto& [sub, value] : table.entries()) {
      report.add("roundtrip", sub, phi.moment(sub), moment_from_cumulants(table, sub, eps));
    }
  }
  return report;
}

// Words of length 2..max_n over the model's labels containing at least one UNIT.
Report unit_suite(const SuiteOptions& opt) {
  Report report;
  for (const auto& [name, model] : opt.models) {
    CumulantEngine engine(*model, model->eps());
    const std::vector<int> labels(model->eps().labels().begin(), model->eps().labels().end());
    for (const auto& seq : label_sequences(labels, 2, std::min(opt.max_n, model->degree_cap()))) {
      const auto n = seq.size();
      for (std::uint64_t units = 1; units < (std::uint64_t{1} << n); ++units) {
        Word w = word_from_labels(seq);
        for (std::size_t k = 0; k < n; ++k) {
          if ((units >> k) & 1U) w[k].symbol = Letter::kUnit;
        }
        report.add(name + "/unit_lemma", w, Rational(0), engine.cumulant(w));
      }
    }
  }
  return report;
}

Report theorem8_suite(const SuiteOptions& opt) {
  Report report;
  for (const auto& [name, model] : opt.models) {
    CumulantEngine engine(*model, model->eps());
    LatticeCache lattices(engine.enumerator());
    const std::vector<int> labels(model->eps().labels().begin(), model->eps().labels().end());
    for (const auto& seq : label_sequences(labels, 1, std::min(opt.max_n, model->degree_cap()))) {
      const Word w = word_from_labels(seq);
      const Decoration d(seq);
      const auto& fine = lattices.get(d);
      for (const auto& g : label_constant_groupings(d)) {
        Theorem8Evaluator evaluator(engine, fine, w, g);
        const auto& coarse = lattices.get(evaluator.group_decoration());
        std::string failure;
        for (const auto& gamma : coarse.elements()) {
          const auto sides = evaluator.evaluate(gamma);
          if (!sides.holds()) {
            failure = "Γ=" + gamma.to_string() + ": lhs " + to_string(sides.lhs) + " rhs " + to_string(sides.rhs);
            break;
          }
        }
        report.add({name + "/theorem8 cuts=" + label_list(g.cuts()), w, "lhs = rhs for every Γ",
                    failure.empty() ? "lhs = rhs for every Γ" : failure, failure.empty()});
      }
    }
  }
  return report;
}

Report invariance_suite(const SuiteOptions& opt) {
  Report report;
  for (const auto& [name, model] : opt.models) {
    CumulantEngine engine(*model, model->eps());
    const std::vector<int> labels(model->eps().labels().begin(), model->eps().labels().end());
    for (const auto& seq : label_sequences(labels, 2, std::min(opt.max_n, model->degree_cap()))) {
      const Word w = word_from_labels(seq);
      const Decoration d(seq);
      std::string failure;
      for (const auto& p : *engine.enumerator()->partitions(d)) {
        const DecoratedPartition dp(p, d);
        for (int i = 1; i < d.size() && failure.empty(); ++i) {
          if (!is_allowed_move(dp, i, model->eps())) continue;
          if (!move_invariance_check(engine, dp, w, i)) failure = dp.to_string() + " under τ_" + std::to_string(i);
        }
        if (!failure.empty()) break;
      }
      report.add({name + "/move_invariance", w, "invariant under every allowed move",
                  failure.empty() ? "invariant under every allowed move" : failure, failure.empty()});
    }
  }
  return report;
}

Report prefixed(const std::string& prefix, Report r) {
  Report out;
  for (auto e : r.entries()) {
    e.check = prefix + "/" + e.check;
    out.add(std::move(e));
  }
  return out;
}

}  // namespace

Report check_lattice_axioms(const EpsilonMatrix& eps, int max_n) {
  Report report;
  std::size_t greedy_checked = 0;
  std::size_t greedy_disagreements = 0;
  EpsEnumerator enumerator(eps);
  const std::vector<int> labels(eps.labels().begin(), eps.labels().end());
  for (const auto& seq : label_sequences(labels, 1, max_n)) {
    const Decoration d(seq);
    const EpsLattice lattice(d, enumerator);
    std::string failure;
    for (std::size_t a = 0; a < lattice.size() && failure.empty(); ++a) {
      for (std::size_t b = a + 1; b < lattice.size() && failure.empty(); ++b) {
        try {
          (void)lattice.meet(a, b);
          (void)lattice.join(a, b);
        } catch (const LatticeViolation& e) {
          failure = e.what();
        }
      }
    }
    report.add({"lattice " + eps_tag(eps), word_from_labels(seq), "meet closed, joins unique",
                failure.empty() ? "meet closed, joins unique" : failure, failure.empty()});

    if (d.size() > kGreedyProbeMaxN) continue;
    for (const auto& p : enumerate_partitions(d.size())) {
      const DecoratedPartition dp(p, d);
      ++greedy_checked;
      if (enumerator.decider().decide_greedy(dp) != enumerator.decider().decide(dp)) ++greedy_disagreements;
    }
  }
  report.note("greedy_checked", std::to_string(greedy_checked));
  report.note("greedy_disagreements", std::to_string(greedy_disagreements));
  report.note("greedy_max_n", std::to_string(std::min(max_n, kGreedyProbeMaxN)));
  return report;
}

Report check_interval_bijection(const EpsilonMatrix& eps, int max_n) {
  Report report;
  LatticeCache lattices(std::make_shared<EpsEnumerator>(eps));
  const std::vector<int> labels(eps.labels().begin(), eps.labels().end());
  for (const auto& seq : label_sequences(labels, 1, max_n)) {
    const Decoration d(seq);
    const auto& lattice = lattices.get(d);
    for (const auto& g : label_constant_groupings(d)) {
      const Decoration coarse = group_labels(d, g);
      const auto& small = lattices.get(coarse);
      const std::size_t zero = lattice.index_of(
          lift_inverse_image(DecoratedPartition(SetPartition::finest(coarse.size()), coarse), g).partition);
      std::vector<std::size_t> image;
      std::string problem;
      for (std::size_t k = 0; k < small.size() && problem.empty(); ++k) {
        const auto lifted = lift_inverse_image(small.decorated(k), g);
        auto idx = lattice.find(lifted.partition);
        if (!idx) {
          problem = "lift of " + small.element(k).to_string() + " is not ε-noncrossing";
        } else if (!lattice.leq(zero, *idx)) {
          problem = "lift of " + small.element(k).to_string() + " is not above 0̃_m";
        } else {
          image.push_back(*idx);
        }
      }
      std::size_t above_zero = 0;
      for (std::size_t k = 0; k < lattice.size(); ++k) above_zero += lattice.leq(zero, k) ? 1 : 0;
      if (problem.empty()) {
        auto sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) problem = "lift is not injective";
        else if (sorted.size() != above_zero) problem = "lift misses part of the interval above 0̃_m";
      }
      for (std::size_t a = 0; a < image.size() && problem.empty(); ++a) {
        for (std::size_t b = 0; b < image.size() && problem.empty(); ++b) {
          if (small.leq(a, b) != lattice.leq(image[a], image[b])) problem = "lift does not preserve order";
        }
      }
      report.add({"interval_bijection cuts=" + label_list(g.cuts()) + " " + eps_tag(eps), word_from_labels(seq),
                  "order isomorphism", problem.empty() ? "order isomorphism" : problem, problem.empty()});
    }
  }
  return report;
}

RandomFunctional::RandomFunctional(std::uint64_t seed) : seed_(seed) {}

Rational RandomFunctional::moment(std::span<const Letter> w) const {
  Word key = strip_units(w);
  if (key.empty()) return Rational(1);
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::mt19937_64 rng(seed_ ^ (WordHash{}(key) * 0x9e3779b97f4a7c15ULL));
  return cache_.emplace(key, random_rational(rng)).first->second;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"endpoints", "lattice",   "restriction",  "roundtrip",      "unit",
                                                 "theorem8",  "invariance", "independence", "mixed-cumulants"};
  return names;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "all") {
    Report all;
    for (const auto& n : suite_names()) {
      Report r = run_suite(n, options);
      all.merge(r);
    }
    return all;
  }
  if (name == "endpoints") return endpoints_suite(options);
  if (name == "lattice") return lattice_suite(options);
  if (name == "restriction") return restriction_suite(options);
  if (name == "roundtrip") return roundtrip_suite(options);
  if (name == "unit") return unit_suite(options);
  if (name == "theorem8") return theorem8_suite(options);
  if (name == "invariance") return invariance_suite(options);
  if (name == "independence" || name == "mixed-cumulants") {
    Report out;
    for (const auto& [model_name, model] : options.models) {
      out.merge(prefixed(model_name, name == "independence" ? verify_eps_independence(*model, options.max_n)
                                                            : verify_mixed_cumulants_vanish(*model, options.max_n)));
    }
    return out;
  }
  throw InvalidArgument("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace epsnc
