#include "gitcomb/stability.hpp"

#include "gitcomb/representation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gitcomb {

Configuration::Configuration(std::vector<ProjPoint> points, std::vector<BinaryForm> forms)
    : points_(std::move(points)), forms_(std::move(forms)) {
  if (forms_.empty()) throw std::invalid_argument("Configuration: at least one form required");
  for (const auto& f : forms_)
    if (f.degree() != forms_.front().degree())
      throw std::invalid_argument("Configuration: forms must share one degree");
  if (std::all_of(forms_.begin(), forms_.end(), [](const BinaryForm& f) { return f.is_zero(); }))
    throw std::invalid_argument("Configuration: forms must not all be zero");
}

namespace {

void check_dims(const Configuration& c, const Linearization& k) {
  if (c.n() != k.n() || c.d() != k.d())
    throw std::invalid_argument("stability: configuration and linearization dimensions differ");
}

Stability classify(const Rational& score, const Rational& half) {
  int s = Rational(score - half).sign();
  if (s < 0) return Stability::Stable;
  if (s == 0) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

StabilityStatus finish(Stability verdict, StabilityWitness w) {
  if (verdict == Stability::Stable) return {verdict, std::nullopt};
  return {verdict, std::move(w)};
}

}  // namespace

StabilityStatus stability_status(const Configuration& c, const Linearization& k) {
  check_dims(c, k);
  const Rational half = k.half();

  Rational best = 0;
  StabilityWitness witness{std::nullopt, std::nullopt, -half};
  bool have_candidate = false;

  // Marked points, with coincidences merged.
  std::map<ProjPoint, Rational> point_weight;
  for (int i = 0; i < c.n(); ++i) point_weight[c.points()[i]] += k.point_weight(i);
  std::vector<ProjPoint> marked;
  for (const auto& [p, kw] : point_weight) {
    marked.push_back(p);
    Rational score = kw + k.form_weight() * common_vanishing(c.forms(), p);
    if (!have_candidate || score > best) {
      best = score;
      witness = {p, std::nullopt, score - half};
      have_candidate = true;
    }
  }

  // Unmarked common roots, rational or not, via the gcd's factor multiplicities.
  BinaryForm g = gcd_forms(c.forms());
  if (g.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decompose(g)) {
      Rational score = k.form_weight() * mult;
      if (have_candidate && score <= best) continue;
      // Locate a root of this factor outside the marked set.
      std::optional<ProjPoint> at;
      int marked_roots = 0;
      for (const auto& p : marked)
        if (vanishing_order(factor, p) > 0) ++marked_roots;
      if (factor.degree() - marked_roots <= 0) continue;
      for (const auto& p : rational_roots(factor)) {
        if (point_weight.contains(p)) continue;
        at = p;
        break;
      }
      best = score;
      if (at)
        witness = {*at, std::nullopt, score - half};
      else
        witness = {std::nullopt, factor, score - half};
      have_candidate = true;
    }
  }

  if (!have_candidate) return {Stability::Stable, std::nullopt};
  return finish(classify(best, half), std::move(witness));
}

std::pair<Int, Int> torus_weight_interval(const Configuration& c, const Linearization& k) {
  check_dims(c, k);
  if (!k.is_integral())
    throw std::invalid_argument("torus_weight_interval: integral weights required");

  Int lo = 0, hi = 0;
  for (int i = 0; i < c.n(); ++i) {
    Int ki = numerator(k.point_weight(i));
    const ProjPoint& p = c.points()[i];
    // Exponent contribution 2 s_i - k_i with s_i in 0..k_i, pinned at the
    // torus fixed points: [1:0] forces s_i = 0, [0:1] forces s_i = k_i.
    if (p.is_infinity()) {
      lo += -ki;
      hi += -ki;
    } else if (p.x().is_zero()) {
      lo += ki;
      hi += ki;
    } else {
      lo += -ki;
      hi += ki;
    }
  }

  bool any = false;
  Int fmin = 0, fmax = 0;
  const int d = c.d();
  for (const auto& f : c.forms())
    for (int i = 0; i <= d; ++i) {
      if (f.coeffs()[i].is_zero()) continue;
      Int w = d - 2 * i;
      if (!any || w < fmin) fmin = w;
      if (!any || w > fmax) fmax = w;
      any = true;
    }
  Int kf = numerator(k.form_weight());
  lo += kf * fmin;
  hi += kf * fmax;
  return {lo, hi};
}

namespace {

Stability torus_verdict(const Int& lo, const Int& hi) {
  if (lo < 0 && hi > 0) return Stability::Stable;
  if (lo <= 0 && hi >= 0) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

}  // namespace

StabilityStatus torus_stability(const Configuration& c, const Linearization& k) {
  auto [lo, hi] = torus_weight_interval(c, k);
  Stability verdict = torus_verdict(lo, hi);
  if (verdict == Stability::Stable) return {verdict, std::nullopt};
  // All weights <= 0 concentrates the orbit limit at [1:0], all >= 0 at [0:1].
  ProjPoint p = (hi <= 0) ? ProjPoint::infinity() : ProjPoint(0, 1);
  Rational score = 0;
  for (int i = 0; i < c.n(); ++i)
    if (c.points()[i] == p) score += k.point_weight(i);
  score += k.form_weight() * common_vanishing(c.forms(), p);
  return finish(verdict, {p, std::nullopt, score - k.half()});
}

StabilityStatus hm_oracle(const Configuration& c, const Linearization& k) {
  check_dims(c, k);
  const Rational half = k.half();

  std::set<ProjPoint> candidates(c.points().begin(), c.points().end());
  BinaryForm g = gcd_forms(c.forms());
  auto factors = g.degree() > 0 ? squarefree_decompose(g) : std::vector<SquarefreeFactor>{};
  for (const auto& [factor, mult] : factors)
    for (const auto& p : rational_roots(factor)) candidates.insert(p);

  StabilityStatus result{Stability::Stable, std::nullopt};
  auto merge = [&](Stability verdict, StabilityWitness w) {
    if (verdict < result.verdict) result = finish(verdict, std::move(w));
  };

  for (const auto& p : candidates) {
    MobiusTransform conj = mobius_to_infinity(p);
    Configuration moved = act_on_configuration(conj, c);
    StabilityStatus t = torus_stability(moved, k);
    // Translate the witness back through the conjugation.
    StabilityWitness w{std::nullopt, std::nullopt, 0};
    if (t.witness) {
      w.excess = t.witness->excess;
      w.point = mobius_apply(conj.inverse(), *t.witness->point);
    }
    merge(t.verdict, std::move(w));
  }

  // Irrational common roots: a factor of multiplicity e, not fully accounted
  // for by rational points, scores k_{n+1} * e at each of its roots.
  for (const auto& [factor, mult] : factors) {
    int covered = static_cast<int>(rational_roots(factor).size());
    if (factor.degree() - covered <= 0) continue;
    Rational score = Rational(mult) * k.form_weight();
    merge(classify(score, half), {std::nullopt, factor, score - half});
  }

  return result;
}

}  // namespace gitcomb
