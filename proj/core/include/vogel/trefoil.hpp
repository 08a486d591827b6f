#pragma once

#include <array>
#include <vector>

#include "vogel/laurent.hpp"
#include "vogel/projective.hpp"
#include "vogel/rational.hpp"

namespace vogel {

/// coefficient * u^e0 v^e1 w^e2
struct Monomial {
  long coefficient;
  std::array<int, 3> exponents;
};

/// The universal adjoint trefoil polynomial in u = q^alpha, v = q^beta,
/// w = q^gamma, one entry per displayed monomial (common (uvw)^4 included).
const std::vector<Monomial>& trefoil_monomials();

/// Value at u = v = w = 1.
long trefoil_coefficient_sum();

/// Exact expansion in q at p; rational coordinates give fractional powers.
LaurentPoly trefoil_laurent(const PPoint& p);

double trefoil_eval(const PPoint& p, double q);

/// Exact value at rational q; throws vogel::Error unless p has integer
/// coordinates.
Rational trefoil_eval_exact(const PPoint& p, const Rational& q);

}  // namespace vogel
