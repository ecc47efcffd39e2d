#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "epsnc/decorated.hpp"
#include "epsnc/models.hpp"
#include "epsnc/rational.hpp"
#include "epsnc/word.hpp"

namespace epsnc {

/// Unital functional with a pseudo-random rational value for every nonempty
/// reduced word, fixed by the seed and the word. Used for round-trip sweeps.
class RandomFunctional final : public MomentFunctional {
 public:
  explicit RandomFunctional(std::uint64_t seed);
  Rational moment(std::span<const Letter> w) const override;

 private:
  std::uint64_t seed_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Rational, WordHash> cache_;
};

struct ReportEntry {
  std::string check;
  Word word;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Outcome of a verification sweep. Failures are recorded, never thrown.
class Report {
 public:
  void add(ReportEntry entry);
  void add(std::string check, Word word, const Rational& expected, const Rational& actual);
  void merge(const Report& other);
  /// Free-form observations that do not affect pass/fail.
  void note(const std::string& key, std::string value) { notes_[key] = std::move(value); }

  const std::vector<ReportEntry>& entries() const { return entries_; }
  const std::map<std::string, std::string>& notes() const { return notes_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

 private:
  std::vector<ReportEntry> entries_;
  std::map<std::string, std::string> notes_;
};

/// {"checks", "failures", "pass", "notes", "entries"}; entries lists every
/// check when `include_passing`, otherwise only failures. Each entry is
/// {check, word, expected, actual, pass}.
nlohmann::json to_json(const Report& report, bool include_passing);

/// Every label sequence over `labels` with length in [min_n, max_n], shorter
/// first, lexicographic within a length.
std::vector<std::vector<int>> label_sequences(const std::vector<int>& labels, int min_n, int max_n);

/// ε-independence of a model: for each admissible label sequence (n <= max_n)
/// the centered moment vanishes, and moments are unchanged by swapping
/// adjacent letters of distinct labels with ε = 1.
Report verify_eps_independence(const ModelFunctional& mf, int max_n);

/// Every mixed ε-cumulant vanishes and every single-label cumulant equals the
/// model's κ, for words of length <= max_n.
Report verify_mixed_cumulants_vanish(const ModelFunctional& mf, int max_n);

/// The 8 symmetric ε-matrices on {1, 2} followed by a fixed sample of 8
/// matrices on {1, 2, 3}.
std::vector<EpsilonMatrix> two_label_matrices();
std::vector<EpsilonMatrix> three_label_sample();

/// For every decoration over eps's labels with n <= max_n: P^{d,ε}_n is closed
/// under the meet of P_n and every pair has exactly one minimal upper bound.
/// Also counts partitions on which the greedy decision procedure disagrees
/// with the exhaustive one (notes "greedy_checked", "greedy_disagreements"),
/// for n <= kGreedyProbeMaxN only since the greedy walk has no memo.
inline constexpr int kGreedyProbeMaxN = 5;
Report check_lattice_axioms(const EpsilonMatrix& eps, int max_n);

/// For every decoration d̃ with n <= max_n and every grouping whose groups are
/// label-constant under d̃: lifting is an order isomorphism from the lattice
/// over the groups onto {Φ ∈ P^{d̃,ε}_n : Φ >= 0̃_m}.
Report check_interval_bijection(const EpsilonMatrix& eps, int max_n);

struct SuiteOptions {
  int max_n = 5;
  std::vector<NamedModel> models = bundled_models();
  std::uint64_t seed = 20160229;
  int trials = 100;
};

/// Names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws InvalidArgument for
/// an unknown name.
Report run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace epsnc
