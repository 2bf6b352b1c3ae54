#include "gitcomb/census.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gitcomb {

namespace {

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

void check_label(const DivisorLabel& lbl) {
  if (lbl.n < 0 || lbl.d < 0 || lbl.d2 < 0 || lbl.d2 > lbl.d ||
      (lbl.n2_mask & ~full_mask(lbl.n)) != 0)
    throw std::invalid_argument("DivisorLabel: out of range");
}

long long binom2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// sum_{i in I} k_i + d_I k_{n+1} - half, the signed wall quantity.
Rational side_score(const Linearization& k, std::uint32_t mask, int d2) {
  Rational s = 0;
  for (int i = 0; i < k.n(); ++i)
    if (mask & (1u << i)) s += k.point_weight(i);
  s += Rational(d2) * k.form_weight();
  return s - k.half();
}

}  // namespace

int DivisorLabel::n2_size() const { return std::popcount(n2_mask); }

std::string label_string(const DivisorLabel& lbl) {
  std::ostringstream os;
  auto set = [&](std::uint32_t mask) {
    os << "{";
    bool first = true;
    for (int i = 0; i < lbl.n; ++i)
      if (mask & (1u << i)) {
        if (!first) os << ",";
        os << (i + 1);
        first = false;
      }
    os << "}";
  };
  os << "D(";
  set(full_mask(lbl.n) & ~lbl.n2_mask);
  os << ",";
  set(lbl.n2_mask);
  os << "," << (lbl.d - lbl.d2) << "," << lbl.d2 << ")";
  return os.str();
}

std::vector<DivisorLabel> divisor_enumerate(int n, int d) {
  if (n < 0 || d < 0 || n >= 31)
    throw std::invalid_argument("divisor_enumerate: bad parameters");
  std::vector<DivisorLabel> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    for (int d2 = 0; d2 <= d; ++d2) {
      DivisorLabel lbl{mask, d2, n, d};
      if (lbl.valid()) out.push_back(lbl);
    }
  return out;
}

Stability divisor_git_status(const DivisorLabel& lbl, const Linearization& k) {
  check_label(lbl);
  if (lbl.n != k.n() || lbl.d != k.d())
    throw std::invalid_argument("divisor_git_status: dimension mismatch");
  int s = side_score(k, lbl.n2_mask, lbl.d2).sign();
  if (s < 0) return Stability::Stable;
  if (s == 0) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

int codim_image(const DivisorLabel& lbl, int r) {
  check_label(lbl);
  if (r < 0) throw std::invalid_argument("codim_image: negative r");
  return lbl.n2_size() + (r + 1) * lbl.d2 - 1;
}

bool is_phi_exceptional(const DivisorLabel& lbl, int r) { return codim_image(lbl, r) >= 2; }

CensusReport census(int n, int d, int r, const Linearization& k) {
  if (n != k.n() || d != k.d()) throw std::invalid_argument("census: dimension mismatch");
  if (r < 0) throw std::invalid_argument("census: negative r");

  CensusReport rep;
  long long exceptional_stable = 0;
  long long codim1_unstable = 0;
  for (const DivisorLabel& lbl : divisor_enumerate(n, d)) {
    ++rep.total;
    switch (divisor_git_status(lbl, k)) {
      case Stability::Stable:
        ++rep.stable;
        if (is_phi_exceptional(lbl, r)) ++exceptional_stable;
        break;
      case Stability::StrictlySemistable:
        ++rep.strictly_semistable;
        break;
      case Stability::Unstable:
        ++rep.unstable;
        if (codim_image(lbl, r) == 1) ++codim1_unstable;
        break;
    }
  }
  rep.phi_exceptional_stable = exceptional_stable;

  if (rep.strictly_semistable == 0 && !on_any_wall(k)) {
    long long rho_ambient = n + ((r == 0 && d == 0) ? 0 : 1);
    rep.e_U = exceptional_stable;
    rep.rho_Q = rho_ambient - codim1_unstable;
    rep.rho_Qprime = *rep.rho_Q + *rep.e_U;
  }
  return rep;
}

Linearization case_linearization(int n, int d) {
  std::vector<Rational> w(n + 1, Rational(1));
  if ((n + d) % 2 == 0) {
    if (n % 2 == 1) {
      w[n] = 2;  // (1,...,1,2)
    } else {
      for (int i = 1; i < n; ++i) w[i] = 2;  // (1,2,...,2,1)
    }
  }
  return Linearization(n, d, std::move(w));
}

long long picard_expected(int n, int d, int r) {
  if (n < 0 || d < 0 || r < 0) throw std::invalid_argument("picard_expected: bad parameters");
  if (r == 0 && d > 0)
    throw std::domain_error("picard_expected: empty moduli space for r = 0, d > 0");
  Rational half_pow(Int(1) << n, 2);  // 2^{n-1}
  Rational val = half_pow * (d + 1) - binom2(n);
  // The missing rank comes from the label (N2, d2) = (empty, 1), whose image
  // has codimension 1 exactly when r <= 1; it exists only for d >= 1, except
  // that r = 0 forces d = 0 where the P^0 factor itself drops a rank.
  if (r == 0 || (r == 1 && d > 0)) val -= 1;
  if (denominator(val) != 1)
    throw std::domain_error("picard_expected: formula is not integral here");
  return static_cast<long long>(numerator(val));
}

WallCrossingReport wall_crossing_diff(int n, int d, int r, const Wall& w,
                                      const Linearization& k_below,
                                      const Linearization& k_above) {
  for (const Wall& other : wall_enumerate(n, d)) {
    WallSide b = wall_membership(k_below, other);
    WallSide a = wall_membership(k_above, other);
    if (other == w) {
      if (b != WallSide::Below || a != WallSide::Above)
        throw std::invalid_argument("wall_crossing_diff: inputs do not straddle the wall");
    } else if (b != a || b == WallSide::On) {
      throw std::invalid_argument("wall_crossing_diff: chambers are not adjacent across the wall");
    }
  }

  WallCrossingReport rep{
      .wall = w,
      .met_below = DivisorLabel{w.subset, w.dI, n, d},
      .met_above = DivisorLabel{full_mask(n) & ~w.subset, d - w.dI, n, d},
      .kind = CrossingKind::SmallModification,
      .contracts_going_up = false,
      .contracts_going_down = false,
      .census_below = census(n, d, r, k_below),
      .census_above = census(n, d, r, k_above),
      .rho_qprime_equal = false,
  };
  rep.contracts_going_up = rep.met_below.valid() && codim_image(rep.met_below, r) == 1;
  rep.contracts_going_down = rep.met_above.valid() && codim_image(rep.met_above, r) == 1;
  for (const DivisorLabel* lbl : {&rep.met_below, &rep.met_above}) {
    if (!lbl->valid() || codim_image(*lbl, r) != 1) continue;
    rep.kind = (lbl->n2_size() == 2 && lbl->d2 == 0) ? CrossingKind::ContractionPair
                                                     : CrossingKind::ContractionCommonRoot;
    break;
  }
  rep.rho_qprime_equal = rep.census_below.rho_Qprime && rep.census_above.rho_Qprime &&
                         *rep.census_below.rho_Qprime == *rep.census_above.rho_Qprime;
  return rep;
}

bool generic_locus_nonempty(const Linearization& k) {
  Rational half = k.half();
  for (int i = 0; i < k.n(); ++i)
    if (k.point_weight(i) >= half) return false;
  return true;
}

std::map<std::vector<WallSide>, Linearization> chamber_representatives(int n, int d, int grid_max) {
  if (grid_max < 1) throw std::invalid_argument("chamber_representatives: grid_max must be >= 1");
  std::map<std::vector<WallSide>, Linearization> reps;
  std::vector<int> idx(n + 1, 1);
  while (true) {
    std::vector<Rational> w(idx.begin(), idx.end());
    Linearization k(n, d, std::move(w));
    if (k.half().sign() > 0) {
      auto sig = chamber_signature(k);
      bool on = std::find(sig.begin(), sig.end(), WallSide::On) != sig.end();
      if (!on && !reps.contains(sig)) reps.emplace(std::move(sig), normalize_to_simplex(k));
    }
    int pos = 0;
    while (pos <= n && ++idx[pos] > grid_max) idx[pos++] = 1;
    if (pos > n) break;
  }
  return reps;
}

std::optional<std::pair<Linearization, Linearization>> adjacent_pair_across(int n, int d,
                                                                            const Wall& w,
                                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(1, 9);
  auto sample = [&] {
    std::vector<Rational> v(n + 1);
    for (auto& c : v) c = entry(rng);
    return Linearization(n, d, std::move(v));
  };
  auto phi = [&](const Linearization& k) { return side_score(k, w.subset, w.dI); };

  for (int attempt = 0; attempt < 4000; ++attempt) {
    Linearization u = sample(), v = sample();
    Rational pu = phi(u), pv = phi(v);
    if (pu.sign() >= 0 || pv.sign() <= 0) continue;
    Rational t = -pu / (pv - pu);
    std::vector<Rational> star(n + 1), delta(n + 1);
    for (int i = 0; i <= n; ++i) {
      delta[i] = v.weights()[i] - u.weights()[i];
      star[i] = u.weights()[i] + t * delta[i];
    }
    Linearization ks(n, d, star);

    // Step size keeping every other wall's sign and all weights positive.
    Rational eps = 1;
    bool bad = false;
    for (const Wall& other : wall_enumerate(n, d)) {
      if (other == w) continue;
      Rational val = side_score(ks, other.subset, other.dI);
      if (val.is_zero()) {
        bad = true;
        break;
      }
      Rational slope = 0;
      for (int i = 0; i < n; ++i)
        if (other.subset & (1u << i)) slope += delta[i];
      slope += Rational(other.dI) * delta[n];
      Rational dsum = 0;
      for (int i = 0; i < n; ++i) dsum += delta[i];
      dsum += Rational(d) * delta[n];
      slope -= dsum / 2;
      if (!slope.is_zero()) eps = std::min(eps, Rational(abs(val) / (2 * abs(slope))));
    }
    if (bad) continue;
    for (int i = 0; i <= n; ++i)
      if (!delta[i].is_zero()) eps = std::min(eps, Rational(star[i] / (2 * abs(delta[i]))));

    std::vector<Rational> lo(n + 1), hi(n + 1);
    for (int i = 0; i <= n; ++i) {
      lo[i] = star[i] - eps * delta[i];
      hi[i] = star[i] + eps * delta[i];
    }
    Linearization below(n, d, std::move(lo)), above(n, d, std::move(hi));
    if (wall_membership(below, w) != WallSide::Below ||
        wall_membership(above, w) != WallSide::Above)
      continue;
    return std::pair{normalize_to_simplex(below), normalize_to_simplex(above)};
  }
  return std::nullopt;
}

}  // namespace gitcomb
