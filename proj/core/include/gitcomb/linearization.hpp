#pragma once

#include "gitcomb/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gitcomb {

/// A positive weight vector (k_1, ..., k_{n+1}) on Pic^G((P^1)^n x P^r_d).
class Linearization {
 public:
  Linearization(int n, int d, std::vector<Rational> weights);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& point_weight(int i) const { return weights_[i]; }  // 0-based, i < n
  const Rational& form_weight() const { return weights_.back(); }

  /// (sum k_i + d k_{n+1}) / 2, the threshold in the stability inequality.
  Rational half() const;
  bool is_integral() const;
  Linearization scaled(const Rational& c) const;

  bool operator==(const Linearization& o) const = default;

 private:
  int n_, d_;
  std::vector<Rational> weights_;
};

/// The wall W_{I,d_I}, stored in the canonical representative of the pair
/// {(I,d_I), (I^c, d-d_I)}.
struct Wall {
  std::uint32_t subset;  // bit i set <=> mark i+1 in I
  int dI;
  int n, d;

  static Wall canonical(std::uint32_t subset, int dI, int n, int d);
  bool operator==(const Wall& o) const = default;
};

enum class WallSide { Below, On, Above };

/// The positive scalar multiple of k on the simplex sum k_i + d k_{n+1} = 2.
Linearization normalize_to_simplex(const Linearization& k);

/// All walls up to the identification W_{I,d_I} = W_{I^c,d-d_I}.
std::vector<Wall> wall_enumerate(int n, int d);

/// Sign of sum_{i in I} k_i + d_I k_{n+1} - half(k). Scale invariant.
WallSide wall_membership(const Linearization& k, const Wall& w);

std::optional<Wall> on_any_wall(const Linearization& k);

std::vector<WallSide> chamber_signature(const Linearization& k);

/// True iff every wall classifies k and k2 on the same side. Throws if either
/// lies on a wall.
bool same_chamber(const Linearization& k, const Linearization& k2);

}  // namespace gitcomb
