#include "gitcomb/linearization.hpp"

#include <bit>
#include <stdexcept>

namespace gitcomb {

Linearization::Linearization(int n, int d, std::vector<Rational> weights)
    : n_(n), d_(d), weights_(std::move(weights)) {
  if (n_ < 0 || d_ < 0) throw std::invalid_argument("Linearization: n and d must be non-negative");
  if (static_cast<int>(weights_.size()) != n_ + 1)
    throw std::invalid_argument("Linearization: expected n + 1 weights");
  for (const auto& w : weights_)
    if (w.sign() <= 0) throw std::invalid_argument("Linearization: weights must be positive");
}

Rational Linearization::half() const {
  Rational sum = 0;
  for (int i = 0; i < n_; ++i) sum += weights_[i];
  sum += Rational(d_) * weights_[n_];
  return sum / 2;
}

bool Linearization::is_integral() const {
  for (const auto& w : weights_)
    if (denominator(w) != 1) return false;
  return true;
}

Linearization Linearization::scaled(const Rational& c) const {
  std::vector<Rational> w(weights_);
  for (auto& x : w) x *= c;
  return Linearization(n_, d_, std::move(w));
}

Wall Wall::canonical(std::uint32_t subset, int dI, int n, int d) {
  std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
  std::uint32_t comp = full & ~subset;
  int dComp = d - dI;
  if (std::pair(dComp, comp) < std::pair(dI, subset)) return Wall{comp, dComp, n, d};
  return Wall{subset, dI, n, d};
}

Linearization normalize_to_simplex(const Linearization& k) {
  Rational total = k.half() * 2;
  if (total.sign() <= 0)
    throw std::invalid_argument("normalize_to_simplex: degenerate weight sum");
  return k.scaled(Rational(2) / total);
}

std::vector<Wall> wall_enumerate(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("wall_enumerate: n and d must be non-negative");
  if (n >= 31) throw std::invalid_argument("wall_enumerate: n too large");
  std::vector<Wall> walls;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset)
    for (int dI = 0; dI <= d; ++dI) {
      Wall w = Wall::canonical(subset, dI, n, d);
      if (w.subset == subset && w.dI == dI) walls.push_back(w);
    }
  return walls;
}

WallSide wall_membership(const Linearization& k, const Wall& w) {
  if (k.n() != w.n || k.d() != w.d)
    throw std::invalid_argument("wall_membership: dimension mismatch");
  Rational sum = 0;
  for (int i = 0; i < k.n(); ++i)
    if (w.subset & (1u << i)) sum += k.point_weight(i);
  sum += Rational(w.dI) * k.form_weight();
  int s = Rational(sum - k.half()).sign();
  if (s < 0) return WallSide::Below;
  if (s > 0) return WallSide::Above;
  return WallSide::On;
}

std::optional<Wall> on_any_wall(const Linearization& k) {
  for (const Wall& w : wall_enumerate(k.n(), k.d()))
    if (wall_membership(k, w) == WallSide::On) return w;
  return std::nullopt;
}

std::vector<WallSide> chamber_signature(const Linearization& k) {
  std::vector<WallSide> sig;
  for (const Wall& w : wall_enumerate(k.n(), k.d())) sig.push_back(wall_membership(k, w));
  return sig;
}

bool same_chamber(const Linearization& k, const Linearization& k2) {
  if (k.n() != k2.n() || k.d() != k2.d())
    throw std::invalid_argument("same_chamber: dimension mismatch");
  auto a = chamber_signature(k);
  auto b = chamber_signature(k2);
  for (const auto& sig : {a, b})
    for (WallSide s : sig)
      if (s == WallSide::On) throw std::invalid_argument("same_chamber: input lies on a wall");
  return a == b;
}

}  // namespace gitcomb
