#include "vogel/trefoil.hpp"

#include <cmath>

#include "vogel/errors.hpp"

namespace vogel {

namespace {

std::vector<Monomial> transcribe() {
  // Bracketed polynomial as displayed, before the (uvw)^4 prefactor.
  const std::vector<Monomial> inner = {
      {-1, {6, 6, 6}},
      {1, {6, 6, 5}}, {1, {5, 6, 6}}, {1, {6, 5, 6}},
      {-1, {6, 5, 5}}, {-1, {5, 6, 5}}, {-1, {5, 5, 6}},
      {-1, {5, 4, 4}}, {-1, {4, 5, 4}}, {-1, {4, 4, 5}},
      {1, {5, 4, 3}}, {1, {3, 5, 4}}, {1, {4, 3, 5}}, {1, {5, 3, 4}}, {1, {4, 5, 3}}, {1, {3, 4, 5}},
      {3, {4, 4, 4}},
      {-1, {4, 4, 3}}, {-1, {3, 4, 4}}, {-1, {4, 3, 4}},
      {1, {4, 3, 3}}, {1, {3, 4, 3}}, {1, {3, 3, 4}},
      {-1, {4, 2, 2}}, {-1, {2, 4, 2}}, {-1, {2, 2, 4}},
      {-1, {3, 3, 2}}, {-1, {2, 3, 3}}, {-1, {3, 2, 3}},
      {1, {3, 2, 2}}, {1, {2, 3, 2}}, {1, {2, 2, 3}},
      {-1, {3, 2, 1}}, {-1, {1, 3, 2}}, {-1, {2, 1, 3}}, {-1, {3, 1, 2}}, {-1, {2, 3, 1}}, {-1, {1, 2, 3}},
      {-2, {2, 2, 2}},
      {1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}},
      {1, {1, 1, 0}}, {1, {0, 1, 1}}, {1, {1, 0, 1}},
      {1, {0, 0, 0}},
  };
  std::vector<Monomial> out;
  out.reserve(inner.size());
  for (Monomial m : inner) {
    for (int& e : m.exponents) e += 4;
    out.push_back(m);
  }
  return out;
}

Rational q_exponent(const Monomial& m, const PPoint& p) {
  return Rational(m.exponents[0]) * p[0] + Rational(m.exponents[1]) * p[1] + Rational(m.exponents[2]) * p[2];
}

}  // namespace

const std::vector<Monomial>& trefoil_monomials() {
  static const std::vector<Monomial> terms = transcribe();
  return terms;
}

long trefoil_coefficient_sum() {
  long sum = 0;
  for (const Monomial& m : trefoil_monomials()) sum += m.coefficient;
  return sum;
}

LaurentPoly trefoil_laurent(const PPoint& p) {
  std::map<Rational, BigInt> terms;
  for (const Monomial& m : trefoil_monomials()) terms[q_exponent(m, p)] += m.coefficient;
  return LaurentPoly::from_exponents(terms);
}

double trefoil_eval(const PPoint& p, double q) {
  double sum = 0.0;
  for (const Monomial& m : trefoil_monomials()) {
    sum += static_cast<double>(m.coefficient) * std::pow(q, q_exponent(m, p).get_d());
  }
  return sum;
}

Rational trefoil_eval_exact(const PPoint& p, const Rational& q) {
  if (!p.is_integral()) throw Error("exact trefoil evaluation needs integer coordinates");
  if (q == 0) throw Error("q must be nonzero");
  Rational sum = 0;
  for (const Monomial& m : trefoil_monomials()) {
    long e = q_exponent(m, p).get_num().get_si();
    Rational power = 1;
    Rational base = e < 0 ? Rational(1) / q : q;
    for (long i = 0; i < std::labs(e); ++i) power *= base;
    sum += Rational(m.coefficient) * power;
  }
  return sum;
}

}  // namespace vogel
