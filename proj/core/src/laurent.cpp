#include "vogel/laurent.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "vogel/errors.hpp"

namespace vogel {

namespace {

using Dense = std::vector<BigInt>;

// p * (w^m - 1)
Dense times_cyclotomic(const Dense& p, std::size_t m) {
  Dense out(p.size() + m, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + m] += p[i];
    out[i] -= p[i];
  }
  return out;
}

// Exact quotient p / (w^m - 1), or false on nonzero remainder.
bool divide_cyclotomic(Dense& p, std::size_t m) {
  if (p.size() <= m) {
    for (const auto& c : p) {
      if (c != 0) return false;
    }
    p.assign(1, 0);
    return true;
  }
  std::size_t qsize = p.size() - m;
  Dense q(qsize, 0);
  for (std::size_t j = qsize; j-- > 0;) {
    q[j] = p[j + m];
    if (j + m < qsize) q[j] += q[j + m];
  }
  for (std::size_t i = 0; i < m; ++i) {
    BigInt rem = p[i];
    if (i < qsize) rem += q[i];
    if (rem != 0) return false;
  }
  p = std::move(q);
  return true;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const BigInt& value) {
  return from_exponents({{Rational(0), value}});
}

LaurentPoly LaurentPoly::from_exponents(const std::map<Rational, BigInt>& terms) {
  BigInt g = 1;
  for (const auto& [e, c] : terms) {
    if (c != 0) g = lcm(g, BigInt(e.get_den()));
  }
  LaurentPoly out;
  out.granularity_ = g.get_si();
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Rational scaled = e * Rational(g);
    out.terms_[scaled.get_num().get_si()] += c;
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

double LaurentPoly::evaluate(double x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c.get_d() * std::exp(static_cast<double>(e) / static_cast<double>(granularity_) * x / 2.0);
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    Rational exponent(e, granularity_);
    exponent.canonicalize();
    if (exponent == 1) {
      out += "q";
    } else if (is_integer(exponent)) {
      out += "q^" + vogel::to_string(exponent);
    } else {
      out += "q^(" + vogel::to_string(exponent) + ")";
    }
  }
  return out;
}

LaurentResult laurent_expand(const InstantiatedProduct& e) {
  if (e.zero_denominator_count() > 0) {
    throw SingularAtPoint("denominator factor vanishes at the point");
  }
  if (e.zero_numerator_count() > 0) return LaurentPoly();
  if (e.mode() == Mode::Rational) {
    Rational value = e.classical_limit();
    if (!is_integer(value)) return NonDivisibility{"constant " + to_string(value) + " is not integral", Rational(0)};
    return LaurentPoly::constant(value.get_num());
  }

  BigInt g = 1;
  for (const auto& [a, mult] : e.numerator()) g = lcm(g, BigInt(a.get_den()));
  for (const auto& [a, mult] : e.denominator()) g = lcm(g, BigInt(a.get_den()));
  auto steps = [&](const Rational& a) {
    Rational m = a * Rational(g);
    return static_cast<std::size_t>(m.get_num().get_ui());
  };

  Dense poly{1};
  long shift = 0;
  long halves = 0;
  for (const auto& [a, mult] : e.numerator()) {
    std::size_t m = steps(a);
    for (int i = 0; i < mult; ++i) {
      poly = times_cyclotomic(poly, m);
      shift -= static_cast<long>(m);
      --halves;
    }
  }
  for (const auto& [a, mult] : e.denominator()) {
    std::size_t m = steps(a);
    for (int i = 0; i < mult; ++i) {
      if (!divide_cyclotomic(poly, m)) {
        return NonDivisibility{"sinh(" + to_string(a) + "x/4) does not divide the numerator", a};
      }
      shift += static_cast<long>(m);
      ++halves;
    }
  }

  // Each sinh contributes a factor 1/2; `halves` counts net factors of 2.
  Rational factor = e.scale() * e.sign();
  if (halves > 0) {
    factor *= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(halves));
  } else if (halves < 0) {
    factor /= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(-halves));
  }

  std::map<Rational, BigInt> terms;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    Rational c = factor * Rational(poly[i]);
    if (!is_integer(c)) {
      return NonDivisibility{"coefficient " + to_string(c) + " is not integral", Rational(0)};
    }
    Rational exponent(BigInt(2 * static_cast<long>(i) + shift), 2 * g);
    exponent.canonicalize();
    terms[exponent] = c.get_num();
  }
  return LaurentPoly::from_exponents(terms);
}

}  // namespace vogel
