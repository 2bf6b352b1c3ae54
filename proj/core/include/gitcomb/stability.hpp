#pragma once

#include "gitcomb/binary_form.hpp"
#include "gitcomb/linearization.hpp"
#include "gitcomb/projective.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gitcomb {

/// A point of (P^1)^n x P^r_d: n marked points and r+1 forms of uniform
/// degree d, not all zero, understood projectively.
class Configuration {
 public:
  Configuration(std::vector<ProjPoint> points, std::vector<BinaryForm> forms);

  int n() const { return static_cast<int>(points_.size()); }
  int d() const { return forms_.front().degree(); }
  int r() const { return static_cast<int>(forms_.size()) - 1; }
  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<BinaryForm>& forms() const { return forms_; }

 private:
  std::vector<ProjPoint> points_;
  std::vector<BinaryForm> forms_;
};

// Ordered worst-first so std::min merges verdicts.
enum class Stability { Unstable = 0, StrictlySemistable = 1, Stable = 2 };

struct StabilityWitness {
  std::optional<ProjPoint> point;     // rational destabilizing point, when one exists
  std::optional<BinaryForm> factor;   // otherwise an irreducible factor carrying the roots
  Rational excess;                    // S(p) - half
};

struct StabilityStatus {
  Stability verdict;
  std::optional<StabilityWitness> witness;  // present iff verdict != Stable
};

/// The weight inequality criterion: max over candidate points of
///   S(p) = sum_{i : p_i = p} k_i + k_{n+1} d_p
/// compared against half(k).
StabilityStatus stability_status(const Configuration& c, const Linearization& k);

/// Extremes of the achievable torus weights on the big Veronese/Segre
/// embedding. Requires integral weights.
std::pair<Int, Int> torus_weight_interval(const Configuration& c, const Linearization& k);

/// Stability for the maximal torus diag(t^-1, t) alone.
StabilityStatus torus_stability(const Configuration& c, const Linearization& k);

/// Independent re-derivation of G-stability: conjugate every candidate point
/// to [1:0] and take the worst torus verdict; irrational roots enter through
/// the factor-multiplicity bound.
StabilityStatus hm_oracle(const Configuration& c, const Linearization& k);

}  // namespace gitcomb
