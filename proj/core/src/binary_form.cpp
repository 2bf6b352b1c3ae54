#include "gitcomb/binary_form.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gitcomb {

namespace {

// --- univariate helpers: coefficients ascending in x -----------------------

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(Rational(i) * p[i]);
  trim(out);
  return out;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Quotient and remainder of a by b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = a, quot;
  trim(rem);
  if (deg(rem) >= deg(b)) quot.assign(deg(rem) - deg(b) + 1, Rational(0));
  while (deg(rem) >= deg(b)) {
    int shift = deg(rem) - deg(b);
    Rational c = rem.back() / b.back();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  return {quot, rem};
}

Poly make_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly uni_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Yun's algorithm: u = prod a_i^i with the a_i squarefree and coprime.
std::vector<std::pair<Poly, int>> yun(const Poly& u) {
  std::vector<std::pair<Poly, int>> out;
  Poly du = derivative(u);
  Poly g = uni_gcd(u, du);
  Poly b = divmod(u, g).first;
  Poly c = divmod(du, g).first;
  Poly d = sub(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    Poly a = uni_gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    if (deg(a) > 0) out.emplace_back(make_monic(a), i);
  }
  return out;
}

std::vector<Int> divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> out;
  for (Int i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      out.push_back(i);
      out.push_back(v / i);
    }
  }
  return out;
}

std::vector<Rational> uni_rational_roots(Poly u) {
  trim(u);
  std::vector<Rational> roots;
  if (u.empty()) throw std::invalid_argument("rational roots of the zero polynomial");
  size_t low = 0;
  while (low < u.size() && u[low].is_zero()) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    u.erase(u.begin(), u.begin() + low);
  }
  if (deg(u) < 1) return roots;
  if (deg(u) == 1) {
    roots.push_back(-u[0] / u[1]);
    return roots;
  }
  // Rational root theorem on the primitive integer model.
  Int scale = 1;
  for (const auto& c : u) scale = lcm(scale, denominator(c));
  std::vector<Int> ic;
  for (const auto& c : u) ic.push_back(numerator(Rational(c * scale)));
  std::set<Rational> seen;
  for (const Int& p : divisors(ic.front()))
    for (const Int& q : divisors(ic.back()))
      for (int s : {1, -1}) {
        Rational cand(s * p, q);
        if (seen.insert(cand).second && eval(u, cand).is_zero()) roots.push_back(cand);
      }
  return roots;
}

// f = y^{ord_inf} * (homogenization of the returned univariate), which has
// coefficient of x^j at index j.
Poly dehomogenize(const BinaryForm& f) {
  Poly u(f.degree() + 1, Rational(0));
  for (int i = 0; i <= f.degree(); ++i) u[f.degree() - i] = f.coeffs()[i];
  trim(u);
  return u;
}

int infinity_order(const BinaryForm& f) {
  for (int i = 0; i <= f.degree(); ++i)
    if (!f.coeffs()[i].is_zero()) return i;
  throw std::invalid_argument("infinity_order of the zero form");
}

BinaryForm homogenize(const Poly& u, int y_power) {
  int e = deg(u);
  std::vector<Rational> coeffs(e + 1 + y_power, Rational(0));
  for (int i = 0; i <= e; ++i) coeffs[e + y_power - i] = u[i];
  return BinaryForm(e + y_power, std::move(coeffs));
}

BinaryForm normalize_leading(const BinaryForm& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) return f.scaled(Rational(1) / c);
  return f;
}

}  // namespace

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0) throw std::invalid_argument("BinaryForm: negative degree");
  if (static_cast<int>(coeffs_.size()) != degree_ + 1)
    throw std::invalid_argument("BinaryForm: coefficient count must be degree + 1");
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Rational>(degree + 1, Rational(0)));
}

BinaryForm BinaryForm::constant(Rational c) { return BinaryForm(0, {std::move(c)}); }

BinaryForm BinaryForm::monomial(int degree, int i) {
  if (i < 0 || i > degree) throw std::invalid_argument("BinaryForm::monomial: index out of range");
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[i] = 1;
  return BinaryForm(degree, std::move(coeffs));
}

BinaryForm BinaryForm::linear_at(const ProjPoint& p) {
  BinaryForm l(1, {p.y(), -p.x()});
  return normalize_leading(l);
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Rational BinaryForm::evaluate(const ProjPoint& p) const {
  std::vector<Rational> xpow(degree_ + 1), ypow(degree_ + 1);
  xpow[0] = ypow[0] = 1;
  for (int i = 1; i <= degree_; ++i) {
    xpow[i] = xpow[i - 1] * p.x();
    ypow[i] = ypow[i - 1] * p.y();
  }
  Rational acc = 0;
  for (int i = 0; i <= degree_; ++i) acc += coeffs_[i] * xpow[degree_ - i] * ypow[i];
  return acc;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Rational> out(degree_ + o.degree_ + 1, Rational(0));
  for (int i = 0; i <= degree_; ++i)
    for (int j = 0; j <= o.degree_; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return BinaryForm(degree_ + o.degree_, std::move(out));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("BinaryForm: degree mismatch in +");
  std::vector<Rational> out(coeffs_);
  for (int i = 0; i <= degree_; ++i) out[i] += o.coeffs_[i];
  return BinaryForm(degree_, std::move(out));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
  return *this + o.scaled(Rational(-1));
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& a : out) a *= c;
  return BinaryForm(degree_, std::move(out));
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw std::invalid_argument("BinaryForm::pow: negative exponent");
  BinaryForm acc = constant(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
  bool first = true;
  for (int i = 0; i <= f.degree(); ++i) {
    const auto& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << rational_string(c);
    if (f.degree() - i > 0) os << "*x^" << (f.degree() - i);
    if (i > 0) os << "*y^" << i;
    first = false;
  }
  if (first) os << "0";
  return os;
}

BinaryForm form_compose(const BinaryForm& f, const MobiusTransform& g) {
  const int d = f.degree();
  BinaryForm u(1, {g.a(), g.b()});
  BinaryForm v(1, {g.c(), g.d()});
  BinaryForm acc = BinaryForm::zero(d);
  for (int i = 0; i <= d; ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    acc = acc + (u.pow(d - i) * v.pow(i)).scaled(f.coeffs()[i]);
  }
  return acc;
}

int vanishing_order(const BinaryForm& f, const ProjPoint& p) {
  if (f.is_zero()) throw std::invalid_argument("vanishing_order of the zero form");
  if (p.is_infinity()) return infinity_order(f);
  Poly u = dehomogenize(f);
  int order = 0;
  while (true) {
    auto [q, r] = divmod(u, Poly{-p.x(), Rational(1)});
    if (!r.empty()) return order;
    ++order;
    u = std::move(q);
    if (u.empty()) return order;  // only when the dehomogenization was a power of (x - x0)
  }
}

int common_vanishing(std::span<const BinaryForm> forms, const ProjPoint& p) {
  int best = -1;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    int v = vanishing_order(f, p);
    if (best < 0 || v < best) best = v;
  }
  if (best < 0) throw std::invalid_argument("common_vanishing: all forms are zero");
  return best;
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (f.is_zero()) {
    if (f.degree() < g.degree()) return std::nullopt;
    return BinaryForm::zero(f.degree() - g.degree());
  }
  int mf = infinity_order(f), mg = infinity_order(g);
  if (mg > mf || g.degree() > f.degree()) return std::nullopt;
  auto [q, r] = divmod(dehomogenize(f), dehomogenize(g));
  if (!r.empty()) return std::nullopt;
  int target = f.degree() - g.degree();
  return homogenize(q, target - deg(q));
}

BinaryForm gcd_forms(std::span<const BinaryForm> forms) {
  std::optional<BinaryForm> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (!acc) {
      acc = f;
      continue;
    }
    int m = std::min(infinity_order(*acc), infinity_order(f));
    Poly u = uni_gcd(dehomogenize(*acc), dehomogenize(f));
    acc = homogenize(u, m);
  }
  if (!acc) throw std::invalid_argument("gcd_forms: all forms are zero");
  return normalize_leading(*acc);
}

std::vector<SquarefreeFactor> squarefree_decompose(const BinaryForm& g) {
  if (g.is_zero()) throw std::invalid_argument("squarefree_decompose of the zero form");
  std::vector<SquarefreeFactor> out;
  int m = infinity_order(g);
  if (m > 0) out.push_back({BinaryForm(1, {Rational(0), Rational(1)}), m});
  Poly u = dehomogenize(g);
  if (deg(u) >= 1)
    for (auto& [factor, mult] : yun(u)) out.push_back({homogenize(factor, 0), mult});
  return out;
}

std::vector<ProjPoint> rational_roots(const BinaryForm& f) {
  std::vector<ProjPoint> roots;
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero form");
  if (infinity_order(f) > 0) roots.push_back(ProjPoint::infinity());
  Poly u = dehomogenize(f);
  if (deg(u) >= 1)
    for (const auto& x : uni_rational_roots(u)) roots.push_back(ProjPoint::finite(x));
  return roots;
}

int max_unmarked_multiplicity(const BinaryForm& g, const std::vector<ProjPoint>& marked) {
  auto factors = squarefree_decompose(g);
  int best = 0;
  for (const auto& [factor, mult] : factors) {
    if (mult <= best) continue;
    int marked_roots = 0;
    for (const auto& p : marked)
      if (vanishing_order(factor, p) > 0) ++marked_roots;
    // The factor is squarefree, so each marked root removes one linear factor.
    if (factor.degree() - marked_roots > 0) best = mult;
  }
  return best;
}

}  // namespace gitcomb
