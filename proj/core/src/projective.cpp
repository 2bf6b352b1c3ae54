#include "gitcomb/projective.hpp"

#include <ostream>
#include <stdexcept>

namespace gitcomb {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  try {
    Int p(num), q(den);
    if (q.is_zero()) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational \"" + s + "\"");
  }
}

std::string rational_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

ProjPoint::ProjPoint(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() && y_.is_zero())
    throw std::invalid_argument("ProjPoint: (0,0) is not a point of P^1");
  if (!y_.is_zero()) {
    x_ /= y_;
    y_ = 1;
  } else {
    x_ = 1;
  }
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  if (y_ != o.y_) return y_ < o.y_;
  return x_ < o.x_;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return os << "[" << rational_string(p.x()) << ":" << rational_string(p.y()) << "]";
}

MobiusTransform::MobiusTransform(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw std::invalid_argument("MobiusTransform: singular matrix");
}

MobiusTransform MobiusTransform::inverse() const {
  // The adjugate; the determinant scalar is irrelevant projectively.
  return {d_, -b_, -c_, a_};
}

MobiusTransform MobiusTransform::operator*(const MobiusTransform& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
          c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

ProjPoint mobius_apply(const MobiusTransform& g, const ProjPoint& p) {
  return {g.a() * p.x() + g.b() * p.y(), g.c() * p.x() + g.d() * p.y()};
}

MobiusTransform mobius_to_infinity(const ProjPoint& p) {
  if (p.is_infinity()) return MobiusTransform::identity();
  // [x0:1] -> [1 : x0 - x0] = [1:0]
  return {0, 1, 1, -p.x()};
}

}  // namespace gitcomb
