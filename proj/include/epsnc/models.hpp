#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "epsnc/eps_noncrossing.hpp"
#include "epsnc/rational.hpp"
#include "epsnc/word.hpp"

namespace epsnc {

/// Cumulant data of one algebra, generated by a single generator (symbol 0).
/// κ(m) is read as a classical cumulant when ε_ii = 1 and as a free cumulant
/// when ε_ii = 0. Degrees without data have κ(m) = 0.
struct AlgebraSpec {
  int label = 0;
  std::map<int, Rational> cumulants;

  Rational kappa(int degree) const;
};

/// Mixed moments of an ε-independent family assembled from per-algebra
/// cumulants:
///
///   φ(w) = Σ_{Γ ∈ P^{d,ε}_n, Γ <= ker d} Π_{B ∈ Γ} κ_{label(B)}(|B|).
///
/// Whether this really is ε-independent is checked by the verification
/// suites, not assumed here. UNIT letters are dropped before evaluation.
class ModelFunctional final : public MomentFunctional {
 public:
  /// One spec per declared label of `eps`; degrees in [1, degree_cap].
  ModelFunctional(EpsilonMatrix eps, std::vector<AlgebraSpec> algebras, int degree_cap = 8);

  const EpsilonMatrix& eps() const { return eps_; }
  const std::vector<AlgebraSpec>& algebras() const { return algebras_; }
  const AlgebraSpec& algebra(int label) const;
  int degree_cap() const { return degree_cap_; }

  /// Throws InvalidArgument for undeclared labels or unknown generators and
  /// LimitExceeded beyond the degree cap.
  Rational moment(std::span<const Letter> w) const override;

 private:
  EpsilonMatrix eps_;
  std::vector<AlgebraSpec> algebras_;
  int degree_cap_;
  mutable EpsNoncrossingDecider decider_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, Rational, WordHash> cache_;
};

inline Rational model_moment(const ModelFunctional& mf, std::span<const Letter> w) { return mf.moment(w); }

/// φ(Π_j (x_j - φ(x_j) 1)), expanded into the 2^n words in which a subset of
/// letters is replaced by the unit of the same algebra.
Rational centered_expand(const ModelFunctional& mf, std::span<const Letter> w);

struct NamedModel {
  std::string name;
  std::shared_ptr<const ModelFunctional> model;
};

/// Models shipped with the library: a generic two-label model for each of the
/// 8 symmetric ε-matrices on {1, 2}, free and tensor pairs of standard
/// semicirculars, and a three-label model with mixed ε.
std::vector<NamedModel> bundled_models();

}  // namespace epsnc
