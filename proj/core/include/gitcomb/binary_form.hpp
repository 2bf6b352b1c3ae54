#pragma once

#include "gitcomb/projective.hpp"
#include "gitcomb/rational.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gitcomb {

/// A homogeneous form of degree d in x, y with exact rational coefficients.
/// coeffs()[i] is the coefficient of x^{d-i} y^i.
class BinaryForm {
 public:
  BinaryForm(int degree, std::vector<Rational> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm constant(Rational c);
  /// x^{degree-i} y^i
  static BinaryForm monomial(int degree, int i);
  /// The linear form vanishing at p, scaled so its first nonzero coefficient is 1.
  static BinaryForm linear_at(const ProjPoint& p);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Rational evaluate(const ProjPoint& p) const;

  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm scaled(const Rational& c) const;
  BinaryForm pow(int e) const;

  bool operator==(const BinaryForm& o) const = default;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

/// f(a x + b y, c x + d y). Degree is preserved.
BinaryForm form_compose(const BinaryForm& f, const MobiusTransform& g);

/// Multiplicity of p as a root of f. Zero form is rejected.
int vanishing_order(const BinaryForm& f, const ProjPoint& p);

/// min over the nonzero forms of vanishing_order. All-zero tuple is rejected.
int common_vanishing(std::span<const BinaryForm> forms, const ProjPoint& p);

/// gcd over Q of the nonzero forms, first nonzero coefficient scaled to 1.
BinaryForm gcd_forms(std::span<const BinaryForm> forms);

/// Exact quotient f / g, or nullopt if g does not divide f.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

struct SquarefreeFactor {
  BinaryForm factor;  // squarefree, pairwise coprime across the list
  int multiplicity;
};

/// g = c * prod factor^multiplicity over Q, with a possible factor y for the
/// root at [1:0]. Factors of degree 0 are omitted.
std::vector<SquarefreeFactor> squarefree_decompose(const BinaryForm& g);

/// All points of P^1(Q) at which f vanishes.
std::vector<ProjPoint> rational_roots(const BinaryForm& f);

/// Largest multiplicity of a root of g (over the algebraic closure) outside
/// `marked`; 0 if every root is marked.
int max_unmarked_multiplicity(const BinaryForm& g, const std::vector<ProjPoint>& marked);

}  // namespace gitcomb
