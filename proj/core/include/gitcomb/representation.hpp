#pragma once

#include "gitcomb/binary_form.hpp"
#include "gitcomb/projective.hpp"
#include "gitcomb/stability.hpp"

#include <span>
#include <vector>

namespace gitcomb {

using RepMatrix = std::vector<std::vector<Rational>>;

/// The induced matrix of g on degree-k forms: row i lists the coefficients of
/// (a x + b y)^{k-i} (c x + d y)^i in the basis x^{k-j} y^j.
RepMatrix rho_matrix(const MobiusTransform& g, int k);

/// (x^k, x^{k-1} y, ..., y^k), nonzero.
std::vector<Rational> veronese(const ProjPoint& p, int k);

RepMatrix mat_mul(const RepMatrix& a, const RepMatrix& b);
std::vector<Rational> mat_vec(const RepMatrix& a, std::span<const Rational> v);

/// True iff a and b are nonzero and proportional.
bool projectively_equal(std::span<const Rational> a, std::span<const Rational> b);

/// Points mapped by g, forms composed with g^{-1}.
Configuration act_on_configuration(const MobiusTransform& g, const Configuration& c);

}  // namespace gitcomb
