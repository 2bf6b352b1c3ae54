#include "gitcomb/representation.hpp"

#include <stdexcept>

namespace gitcomb {

RepMatrix rho_matrix(const MobiusTransform& g, int k) {
  if (k < 0) throw std::invalid_argument("rho_matrix: negative degree");
  RepMatrix m(k + 1);
  BinaryForm top(1, {g.a(), g.b()});
  BinaryForm bot(1, {g.c(), g.d()});
  for (int i = 0; i <= k; ++i) m[i] = (top.pow(k - i) * bot.pow(i)).coeffs();
  return m;
}

std::vector<Rational> veronese(const ProjPoint& p, int k) {
  std::vector<Rational> v(k + 1);
  for (int j = 0; j <= k; ++j) {
    Rational acc = 1;
    for (int t = 0; t < k - j; ++t) acc *= p.x();
    for (int t = 0; t < j; ++t) acc *= p.y();
    v[j] = acc;
  }
  return v;
}

RepMatrix mat_mul(const RepMatrix& a, const RepMatrix& b) {
  size_t n = a.size(), m = b.front().size(), inner = b.size();
  RepMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < inner; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

std::vector<Rational> mat_vec(const RepMatrix& a, std::span<const Rational> v) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

bool projectively_equal(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) return false;
  bool a_zero = true, b_zero = true;
  for (const auto& c : a) a_zero = a_zero && c.is_zero();
  for (const auto& c : b) b_zero = b_zero && c.is_zero();
  if (a_zero || b_zero) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

Configuration act_on_configuration(const MobiusTransform& g, const Configuration& c) {
  std::vector<ProjPoint> points;
  points.reserve(c.n());
  for (const auto& p : c.points()) points.push_back(mobius_apply(g, p));
  MobiusTransform ginv = g.inverse();
  std::vector<BinaryForm> forms;
  forms.reserve(c.forms().size());
  for (const auto& f : c.forms()) forms.push_back(form_compose(f, ginv));
  return Configuration(std::move(points), std::move(forms));
}

}  // namespace gitcomb
