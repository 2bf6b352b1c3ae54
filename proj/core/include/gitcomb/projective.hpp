#pragma once

#include "gitcomb/rational.hpp"

#include <compare>
#include <iosfwd>

namespace gitcomb {

/// A point of P^1 with exact rational homogeneous coordinates.
/// Canonical form: y = 1 when the point is finite, otherwise x = 1, y = 0.
class ProjPoint {
 public:
  ProjPoint(Rational x, Rational y);

  static ProjPoint infinity() { return ProjPoint(1, 0); }
  static ProjPoint finite(Rational x) { return ProjPoint(std::move(x), 1); }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  bool is_infinity() const { return y_.is_zero(); }

  bool operator==(const ProjPoint& o) const = default;
  // Lexicographic order on canonical coordinates, for use as a map key.
  bool operator<(const ProjPoint& o) const;

 private:
  Rational x_, y_;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

/// An element of PGL_2(Q) given by an invertible 2x2 rational matrix.
class MobiusTransform {
 public:
  MobiusTransform(Rational a, Rational b, Rational c, Rational d);

  static MobiusTransform identity() { return {1, 0, 0, 1}; }
  static MobiusTransform swap_xy() { return {0, 1, 1, 0}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational det() const { return a_ * d_ - b_ * c_; }
  MobiusTransform inverse() const;
  MobiusTransform operator*(const MobiusTransform& o) const;

 private:
  Rational a_, b_, c_, d_;
};

/// [x:y] -> [a x + b y : c x + d y], canonically normalized.
ProjPoint mobius_apply(const MobiusTransform& g, const ProjPoint& p);

/// Some rational g with g(p) = [1:0].
MobiusTransform mobius_to_infinity(const ProjPoint& p);

}  // namespace gitcomb
