#include "vogel/resolver.hpp"

#include <cmath>

#include "high_precision.hpp"
#include "vogel/errors.hpp"

namespace vogel {

namespace {

using detail::BigFloat;

struct Expansion {
  LeadingTerm term;
  bool identically_zero = false;
};

// Leading behaviour along v; numerator factors vanishing on the whole line
// go to line_factors.
Expansion expand(const SinhProduct& e, const PPoint& p, const Vec3& v) {
  SinhProduct r = e.reduced();
  Expansion out;
  out.term.residual = InstantiatedProduct(r.mode());
  Rational prefactor = r.scale() * r.sign();
  int order = 0;
  for (const auto& [form, mult] : r.numerator()) {
    Rational at_p = eval_form(form, p);
    if (at_p != 0) {
      out.term.residual.mul_numerator(at_p, mult);
      continue;
    }
    Rational slope = eval_form(form, v);
    if (slope == 0) {
      out.identically_zero = true;
      for (int i = 0; i < mult; ++i) out.term.line_factors.push_back(form);
      continue;
    }
    for (int i = 0; i < mult; ++i) prefactor *= slope;
    order += mult;
  }
  for (const auto& [form, mult] : r.denominator()) {
    Rational at_p = eval_form(form, p);
    if (at_p != 0) {
      out.term.residual.mul_denominator(at_p, mult);
      continue;
    }
    Rational slope = eval_form(form, v);
    if (slope == 0) {
      throw IrregularLine("denominator factor " + form.to_string() + " vanishes along the whole line");
    }
    for (int i = 0; i < mult; ++i) prefactor /= slope;
    order -= mult;
  }
  out.term.order = order;
  out.term.residual = out.term.residual.reduced();
  out.term.prefactor = prefactor;
  return out;
}

BigFloat eval_shifted(const SinhProduct& e, const PPoint& p, const Vec3& v, const Rational& t, const BigFloat& x) {
  InstantiatedProduct at = e.instantiate(shifted(p.coords(), t, v));
  if (at.zero_denominator_count() > 0) {
    throw IrregularLine("denominator factor vanishes at the sample point t=" + to_string(t));
  }
  if (at.zero_numerator_count() > 0) return BigFloat(0);
  return detail::eval_with<BigFloat>(at, x);
}

void require_on_line(const PPoint& p, const PLine& line, const Vec3& v) {
  if (!line.contains(p)) {
    throw NotOnLine("point " + p.to_string() + " is not on line " + line.form().to_string());
  }
  if (eval_form(line.form(), v) != 0) throw Error("direction does not lie along the line");
  if (is_zero(cross(v, p.coords()))) throw Error("direction is proportional to the point");
}

}  // namespace

std::string_view kind_string(Kind kind) {
  switch (kind) {
    case Kind::Regular: return "Regular";
    case Kind::RegularZero: return "RegularZero";
    case Kind::LinearlyResolvable: return "LR";
    case Kind::NotLR: return "NotLR";
  }
  return "?";
}

Classification classify(const SinhProduct& e, const PPoint& p) {
  if (e.has_zero_form_in_denominator()) {
    throw UndefinedExpression("zero form in the denominator");
  }
  Classification c;
  for (const auto& [form, mult] : e.numerator()) {
    if (eval_form(form, p) == 0) c.raw_n += mult;
  }
  for (const auto& [form, mult] : e.denominator()) {
    if (eval_form(form, p) == 0) c.raw_d += mult;
  }
  SinhProduct r = e.reduced();
  std::vector<LinForm> vanishing;
  for (const auto& [form, mult] : r.numerator()) {
    if (eval_form(form, p) == 0) c.n += mult;
  }
  for (const auto& [form, mult] : r.denominator()) {
    if (eval_form(form, p) == 0) {
      c.d += mult;
      vanishing.push_back(form);
    }
  }
  if (c.d == 0) {
    c.kind = c.n == 0 ? Kind::Regular : Kind::RegularZero;
  } else if (c.d <= c.n) {
    c.kind = Kind::LinearlyResolvable;
  } else {
    c.kind = Kind::NotLR;
    c.witnesses = std::move(vanishing);
  }
  return c;
}

LeadingTerm leading_term(const SinhProduct& e, const PPoint& p, const Vec3& v) {
  return expand(e, p, v).term;
}

Rational ResolvedLimit::classical_value() const {
  if (identically_zero) return Rational(0);
  return prefactor * residual.classical_limit();
}

double ResolvedLimit::quantum_value(double x) const {
  if (identically_zero) return 0.0;
  return prefactor.get_d() * residual.eval_numeric(x);
}

ResolvedLimit resolve_along(const SinhProduct& e, const PPoint& p, const PLine& line) {
  return resolve_along(e, p, line, line_direction(line, p));
}

ResolvedLimit resolve_along(const SinhProduct& e, const PPoint& p, const PLine& line, const Vec3& v) {
  require_on_line(p, line, v);
  Classification c = classify(e, p);
  if (c.kind == Kind::NotLR) {
    throw NotResolvable("more vanishing factors below (" + std::to_string(c.d) + ") than above (" +
                        std::to_string(c.n) + ")");
  }
  Expansion x = expand(e, p, v);
  ResolvedLimit out;
  out.line = line;
  out.direction = v;
  out.residual = x.term.residual.reduced();
  if (x.identically_zero || x.term.order > 0) {
    out.identically_zero = true;
    out.prefactor = 0;
  } else {
    out.prefactor = x.term.prefactor;
  }
  return out;
}

double numeric_limit_check(const SinhProduct& e, const PPoint& p, const PLine& line, double x) {
  Vec3 v = line_direction(line, p);
  Classification c = classify(e, p);
  if (c.kind == Kind::NotLR) throw NotResolvable("more vanishing factors below than above");
  BigFloat bx(x);
  SinhProduct r = e.reduced();
  BigFloat f1 = eval_shifted(r, p, v, Rational(1, 1000), bx);
  BigFloat f2 = eval_shifted(r, p, v, Rational(1, 10000), bx);
  BigFloat f3 = eval_shifted(r, p, v, Rational(1, 100000), bx);
  BigFloat r1 = (10 * f2 - f1) / 9;
  BigFloat r2 = (10 * f3 - f2) / 9;
  BigFloat limit = (100 * r2 - r1) / 99;
  return static_cast<double>(limit);
}

double log_slope(const SinhProduct& e, const PPoint& p, const Vec3& v, double x) {
  BigFloat bx(x);
  SinhProduct r = e.reduced();
  std::vector<double> xs;
  std::vector<double> ys;
  Rational t(1, 1000);
  for (int i = 0; i < 4; ++i) {
    BigFloat value = eval_shifted(r, p, v, t, bx);
    xs.push_back(std::log(t.get_d()));
    ys.push_back(static_cast<double>(log(abs(value))));
    t /= 10;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace vogel
